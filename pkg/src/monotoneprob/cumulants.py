"""Monotone cumulants: extraction as the linear-in-N part of dot moments,
the moment-cumulant formula over monotone partitions, and its inversion."""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .algebra import BMatrix, Q
from .moments import CumulantSystem, EvaluationError, MomentSystem, dot_moment, functional_pi
from .partitions import a_pi_polynomial, linear_extension_count, non_crossing_partitions
from .polynomials import MPoly, zero_constant_matrix_coeffs


@lru_cache(maxsize=None)
def nc_weight_columns(n):
    """Per non-crossing partition, the coefficient tuple of its counting
    polynomial (including the mandatory extra-point consistency check)."""
    return tuple((pi, a_pi_polynomial(pi)) for pi in non_crossing_partitions(n))


@lru_cache(maxsize=None)
def linear_weights(n):
    """Coefficient of N in each counting polynomial; these are the universal
    weights expressing a cumulant through interval-block moment values."""
    return tuple((pi, coeffs[0]) for pi, coeffs in nc_weight_columns(n) if coeffs[0] != 0)


@lru_cache(maxsize=None)
def monotone_weights(n):
    """Weight of each non-crossing partition in the moment-cumulant sum.

    Summing 1/|pi|! over all monotone orders of a block set gives
    (number of admissible orders) / (number of blocks)!.
    """
    out = []
    for pi in non_crossing_partitions(n):
        ext = linear_extension_count(pi.blocks)
        out.append((pi, Q(ext, factorial(len(pi.blocks)))))
    return tuple(out)


def dot_polynomial(system, indices, args, method="qmap"):
    """The polynomial N -> phi(b1 (N.X_{i1}) b2 ... bn (N.X_{in})) as an MPoly.

    With the QMAP method the coefficients come straight from the counting
    polynomials; with REDUCTION they are interpolated through the values at
    N = 1..n and the prediction at N = n+1 is checked exactly.
    """
    indices = tuple(indices)
    args = tuple(args)
    n = len(indices)
    if n == 0:
        raise EvaluationError("the dot polynomial needs at least one factor")
    d = system.d
    if method == "qmap":
        coeffs = [BMatrix.zero(d) for _ in range(n + 1)]
        for pi, cs in nc_weight_columns(n):
            val = functional_pi(system, pi, indices, args)
            for m, c in enumerate(cs):
                if c != 0:
                    coeffs[m + 1] = coeffs[m + 1] + val.scale(c)
        return MPoly.from_univariate(coeffs)
    if method == "reduction":
        values = [dot_moment(system, big_n, indices, args, "reduction")
                  for big_n in range(1, n + 2)]
        cs = zero_constant_matrix_coeffs(values[:n])
        poly = MPoly.from_univariate((BMatrix.zero(d),) + cs)
        if poly.evaluate((n + 1,)) != values[n]:
            raise ArithmeticError("dot polynomial fails its extra-point check at N = %d"
                                  % (n + 1,))
        return poly
    raise EvaluationError("unknown dot-polynomial method %r" % (method,))


def cumulant(system):
    """Cumulant system of X: the coefficient of N in the dot polynomial."""

    def fn(indices, args):
        acc = None
        for pi, w in linear_weights(len(indices)):
            val = functional_pi(system, pi, indices, args).scale(w)
            acc = val if acc is None else acc + val
        return acc if acc is not None else BMatrix.zero(system.d)

    return CumulantSystem(system.r, system.d, system.degree_cap, fn)


def moments_from_cumulants(kappa, indices, args):
    """Moment-cumulant formula: sum over monotone partitions of K_pi/|pi|!."""
    indices = tuple(indices)
    acc = None
    for pi, w in monotone_weights(len(indices)):
        val = functional_pi(kappa, pi, indices, args).scale(w)
        acc = val if acc is None else acc + val
    return acc


def moment_system_from_cumulants(kappa):
    """Synthesize the moment system determined by a cumulant system."""
    return MomentSystem(kappa.r, kappa.d, kappa.degree_cap,
                        lambda idx, args: moments_from_cumulants(kappa, idx, args))


def cumulants_from_moments(system):
    """Triangular inversion of the moment-cumulant formula, ascending in n."""

    kappa = CumulantSystem(system.r, system.d, system.degree_cap, None)

    def fn(indices, args):
        n = len(indices)
        total = system.eval(indices, args)
        for pi, w in monotone_weights(n):
            if len(pi.blocks) < 2:
                continue
            total = total - functional_pi(kappa, pi, indices, args).scale(w)
        return total

    kappa._fn = fn
    return kappa
