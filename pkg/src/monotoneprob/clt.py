"""Central limit theorem for a single mean-zero variable.

The limit of phi(b1 X(N) b2 ... bn X(N)) with X(N) the normalized sum of N
independent copies is computed two ways: the monotone-pair-partition
cumulant sum, and the leading coefficient of the dot polynomial.  No square
roots are ever taken; the normalization shows up as a degree bound.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .algebra import BMatrix, Q
from .cumulants import cumulant, dot_polynomial
from .moments import EvaluationError
from .partitions import linear_extension_count, non_crossing_partitions


class MeanZeroError(ValueError):
    """Raised when the CLT is queried on a variable with nonzero mean."""


@lru_cache(maxsize=None)
def pair_weights(n):
    """Monotone pair-partition weights, grouped by underlying block set."""
    out = []
    for pi in non_crossing_partitions(n):
        if all(len(b) == 2 for b in pi.blocks):
            ext = linear_extension_count(pi.blocks)
            out.append((pi, Q(ext, factorial(len(pi.blocks)))))
    return tuple(out)


class CLTQuery:
    """A limit-moment request for a single-variable mean-zero system."""

    def __init__(self, system, n, args):
        if system.r != 1:
            raise EvaluationError("the CLT is implemented for a single variable")
        if n < 1 or n > system.degree_cap:
            raise EvaluationError("word length out of range")
        if len(args) != n:
            raise EvaluationError("need one argument per factor")
        mean = system.eval((1,), (BMatrix.identity(system.d),))
        if not mean.is_zero():
            raise MeanZeroError("variable must have mean zero")
        self.system = system
        self.n = n
        self.args = tuple(args)


def clt_limit(query):
    """Limit moment as the monotone-pair-partition cumulant sum."""
    n = query.n
    d = query.system.d
    if n % 2 == 1:
        return BMatrix.zero(d)
    kappa = cumulant(query.system)
    acc = BMatrix.zero(d)
    for pi, w in pair_weights(n):
        from .moments import functional_pi
        acc = acc + functional_pi(kappa, pi, (1,) * n, query.args).scale(w)
    return acc


def clt_oracle(query):
    """Limit moment as the top admissible coefficient of the dot polynomial.

    Mean zero forces the polynomial degree down to floor(n/2); that bound is
    asserted, so a violation flags a bad model or an oracle bug.
    """
    n = query.n
    half = n // 2
    poly = dot_polynomial(query.system, (1,) * n, query.args)
    for m in range(half + 1, n + 1):
        if not poly.coefficient(m).is_zero():
            raise ArithmeticError(
                "dot polynomial has degree > %d; mean-zero suppression failed" % half)
    if n % 2 == 1:
        return BMatrix.zero(query.system.d)
    return poly.coefficient(half)
