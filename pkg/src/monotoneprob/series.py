"""The algebra of multilinear-functional series over the base algebra.

A series is a constant plus, for every index tuple, a multilinear
functional; the two binary operations are the subset/interpolation-block
composition (odot) and the interval-block operation (star).  Entries are
evaluators, not dense tensors: operations compose lazily, and equality
materializes values on the matrix-unit basis, which multilinearity makes a
complete check.

Entries are generic over the coefficient ring: plain matrices for moment
and cumulant series, matrix-coefficient polynomials for the one- and
two-parameter families, and a tiny term algebra for symbolic counting.
"""

from __future__ import annotations

import itertools
import random

from .algebra import BMatrix, matrix_units, random_matrix
from .cumulants import cumulant, nc_weight_columns
from .moments import (CumulantSystem, EvaluationError, FormalWord,
                      functional_pi, mixed_moment)
from .polynomials import MPoly, binomial_expansion


class SeriesElement:
    """Constant F_empty plus one multilinear functional per index tuple."""

    def __init__(self, r, d, degree_cap, constant, entry_fn):
        self.r = r
        self.d = d
        self.degree_cap = degree_cap
        self.constant = constant
        self._entry_fn = entry_fn
        self._memo = {}

    def entry(self, indices, args):
        indices = tuple(indices)
        args = tuple(args)
        if not indices:
            raise EvaluationError("use .constant for the empty index tuple")
        if len(indices) > self.degree_cap:
            raise EvaluationError("degree cap %d exceeded" % self.degree_cap)
        if any(i < 1 or i > self.r for i in indices):
            raise EvaluationError("component index out of range 1..%d" % self.r)
        key = (indices, args)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._entry_fn(indices, args)
            self._memo[key] = hit
        return hit


def _expand_multilinear(base_fn, dim, indices, args):
    """Extend an entry defined on matrix arguments to polynomial arguments,
    one monomial combination at a time."""
    if all(isinstance(a, BMatrix) for a in args):
        return base_fn(indices, args)
    nvars = next(a.nvars for a in args if isinstance(a, MPoly))
    polys = [a if isinstance(a, MPoly) else MPoly.constant(a, nvars) for a in args]
    acc = None
    for combo in itertools.product(*(list(p.terms.items()) for p in polys)):
        exps = tuple(map(sum, zip(*(c[0] for c in combo))))
        val = base_fn(indices, tuple(c[1] for c in combo))
        term = val * MPoly(nvars, dim, {exps: BMatrix.identity(dim)})
        acc = term if acc is None else acc + term
    return acc if acc is not None else MPoly.zero(dim, nvars)


def _wrap(base_fn, dim):
    return lambda idx, args: _expand_multilinear(base_fn, dim, idx, args)


def identity_series(r, d, degree_cap=6):
    """Constant 1 and vanishing entries: the unit for the composition."""
    zero = BMatrix.zero(d)
    return SeriesElement(r, d, degree_cap, BMatrix.identity(d),
                         lambda idx, args: zero)


def from_moments(system):
    """Moment generating series: constant the unit, entries the moments."""
    return SeriesElement(system.r, system.d, system.degree_cap,
                         BMatrix.identity(system.d), _wrap(system.eval, system.d))


def from_cumulants(source):
    """Cumulant generating series: constant zero.  Accepts a moment system
    (cumulants are extracted) or a ready cumulant system."""
    kappa = source if isinstance(source, CumulantSystem) else cumulant(source)
    return SeriesElement(kappa.r, kappa.d, kappa.degree_cap,
                         BMatrix.zero(kappa.d), _wrap(kappa.eval, kappa.d))


def series_from_tables(r, d, degree_cap, constant, tables):
    """Series backed by dense tables on matrix-unit tuples."""

    def base(indices, args):
        acc = None
        table = tables[indices]
        for combo in itertools.product(*(a.units() for a in args)):
            coef = 1
            keys = []
            for q, key in combo:
                coef = coef * q
                keys.append(key)
            val = table[tuple(keys)].scale(coef)
            acc = val if acc is None else acc + val
        return acc if acc is not None else BMatrix.zero(d)

    return SeriesElement(r, d, degree_cap, constant, _wrap(base, d))


def random_series(seed, r=2, d=2, degree_cap=4, span=2):
    """Seeded random series; entries are arbitrary multilinear functionals."""
    rng = random.Random(seed)
    tables = {}
    keys = [(a, b) for a in range(d) for b in range(d)]
    for n in range(1, degree_cap + 1):
        for idx in itertools.product(range(1, r + 1), repeat=n):
            tables[idx] = {uk: random_matrix(rng, d, span)
                           for uk in itertools.product(keys, repeat=n)}
    return series_from_tables(r, d, degree_cap, random_matrix(rng, d, span), tables)


def series_sum(f, g):
    _check_compatible(f, g)
    return SeriesElement(f.r, f.d, min(f.degree_cap, g.degree_cap),
                         f.constant + g.constant,
                         lambda idx, args: f.entry(idx, args) + g.entry(idx, args))


def series_sub(f, g):
    _check_compatible(f, g)
    return SeriesElement(f.r, f.d, min(f.degree_cap, g.degree_cap),
                         f.constant - g.constant,
                         lambda idx, args: f.entry(idx, args) - g.entry(idx, args))


def _check_compatible(f, g):
    if f.r != g.r or f.d != g.d:
        raise EvaluationError("series have mismatched r or dimension")


def _gaps(v, n):
    """Interpolation gaps of the subset v inside 1..n, including both ends."""
    out = []
    prev = 0
    for x in v:
        out.append(tuple(range(prev + 1, x)))
        prev = x
    out.append(tuple(range(prev + 1, n + 1)))
    return out


def odot(f, g):
    """The composition: for each subset V of positions, feed interpolation
    values of G into F and close with the trailing G value; 2^n terms."""
    _check_compatible(f, g)
    cap = min(f.degree_cap, g.degree_cap)

    def entry(indices, args):
        n = len(indices)
        acc = None
        for mask in range(1 << n):
            v = [p for p in range(1, n + 1) if mask & (1 << (p - 1))]
            gaps = _gaps(v, n)
            slots = []
            for j, pos in enumerate(v):
                gap = gaps[j]
                if gap:
                    gval = g.entry(tuple(indices[p - 1] for p in gap),
                                   tuple(args[p - 1] for p in gap))
                else:
                    gval = g.constant
                slots.append(gval * args[pos - 1])
            tail_gap = gaps[-1]
            if tail_gap:
                tail = g.entry(tuple(indices[p - 1] for p in tail_gap),
                               tuple(args[p - 1] for p in tail_gap))
            else:
                tail = g.constant
            if v:
                fpart = f.entry(tuple(indices[p - 1] for p in v), tuple(slots))
            else:
                fpart = f.constant
            term = fpart * tail
            acc = term if acc is None else acc + term
        return acc

    return SeriesElement(f.r, f.d, cap, f.constant * g.constant, entry)


def star(f, g):
    """Sum over the n(n+1)/2 interval blocks; a block at the right end
    closes the term by right multiplication."""
    _check_compatible(f, g)
    cap = min(f.degree_cap, g.degree_cap)

    def entry(indices, args):
        n = len(indices)
        acc = None
        for k in range(1, n + 1):
            for l in range(n - k + 1):
                gval = g.entry(indices[k - 1:k + l], args[k - 1:k + l])
                if k + l == n:
                    if k == 1:
                        term = f.constant * gval
                    else:
                        term = f.entry(indices[:k - 1], args[:k - 1]) * gval
                else:
                    fidx = indices[:k - 1] + indices[k + l:]
                    fargs = args[:k - 1] + (gval * args[k + l],) + args[k + l + 1:]
                    term = f.entry(fidx, fargs)
                acc = term if acc is None else acc + term
        return acc

    return SeriesElement(f.r, f.d, cap, f.constant * g.constant, entry)


def _value_is_zero(v):
    return v.is_zero()


def series_equal(f, g, max_degree=None, mode="exhaustive", seed=0, samples=2,
                 random_degrees=()):
    """Exact equality check.

    Exhaustive mode compares constants and every entry on all matrix-unit
    argument tuples up to max_degree (complete by multilinearity).
    Randomized spot checks at higher degrees use seeded argument tuples.
    """
    _check_compatible(f, g)
    cap = min(f.degree_cap, g.degree_cap)
    if max_degree is None:
        max_degree = min(cap, 4)
    if f.constant != g.constant:
        return False
    if mode == "exhaustive":
        units = matrix_units(f.d)
        for n in range(1, max_degree + 1):
            for idx in itertools.product(range(1, f.r + 1), repeat=n):
                for args in itertools.product(units, repeat=n):
                    if f.entry(idx, args) != g.entry(idx, args):
                        return False
    rng = random.Random(seed)
    for n in random_degrees:
        for _ in range(samples):
            idx = tuple(rng.randint(1, f.r) for _ in range(n))
            args = tuple(random_matrix(rng, f.d) for _ in range(n))
            if f.entry(idx, args) != g.entry(idx, args):
                return False
    return True


def series_is_zero(f, max_degree=None):
    if not _value_is_zero(f.constant):
        return False
    cap = f.degree_cap if max_degree is None else max_degree
    units = matrix_units(f.d)
    for n in range(1, cap + 1):
        for idx in itertools.product(range(1, f.r + 1), repeat=n):
            for args in itertools.product(units, repeat=n):
                if not _value_is_zero(f.entry(idx, args)):
                    return False
    return True


def muraki_sum(x_system, y_system):
    """Moment series of X + Y for an ordered independent pair, computed by
    composing the two marginal series."""
    return odot(from_moments(x_system), from_moments(y_system))


def muraki_oracle(x_system, y_system):
    """The same series from first principles: expand each entry into the 2^n
    choice words and reduce them over the ordered pair X < Y."""
    if x_system.r != y_system.r or x_system.d != y_system.d:
        raise EvaluationError("marginal systems have mismatched r or dimension")
    r, d = x_system.r, x_system.d
    cap = min(x_system.degree_cap, y_system.degree_cap)
    marginals = {1: x_system, 2: y_system}

    def base(indices, args):
        n = len(indices)
        acc = None
        for mask in range(1 << n):
            labels = tuple(1 if mask & (1 << j) else 2 for j in range(n))
            word = FormalWord.from_moment_args(labels, indices, args)
            val = mixed_moment(word, marginals)
            acc = val if acc is None else acc + val
        return acc

    return SeriesElement(r, d, cap, BMatrix.identity(d), _wrap(base, d))


def t_family(system, nvars=1, var=0):
    """The one-parameter moment family: each entry is the dot polynomial in
    the parameter, with zero constant term; the constant entry is the unit."""
    d = system.d

    def base(indices, args):
        n = len(indices)
        terms = {}
        for pi, coeffs in nc_weight_columns(n):
            val = functional_pi(system, pi, indices, args)
            for m, c in enumerate(coeffs):
                if c == 0:
                    continue
                exps = tuple((m + 1) if i == var else 0 for i in range(nvars))
                add = val.scale(c)
                terms[exps] = terms[exps] + add if exps in terms else add
        return MPoly(nvars, d, terms)

    return SeriesElement(system.r, d, system.degree_cap,
                         MPoly.constant(BMatrix.identity(d), nvars), _wrap(base, d))


def sum_parameter_family(system):
    """The family at parameter value s + t, as a two-variable series."""
    d = system.d

    def base(indices, args):
        n = len(indices)
        acc = MPoly.zero(d, 2)
        for pi, coeffs in nc_weight_columns(n):
            val = functional_pi(system, pi, indices, args)
            acc = acc + MPoly.from_scalar_poly(binomial_expansion(coeffs), val, 2)
        return acc

    return SeriesElement(system.r, d, system.degree_cap,
                         MPoly.constant(BMatrix.identity(d), 2), _wrap(base, d))


def derivative_series(f, var=0):
    constant = f.constant.derivative(var) if isinstance(f.constant, MPoly) \
        else BMatrix.zero(f.d)
    return SeriesElement(f.r, f.d, f.degree_cap, constant,
                         lambda idx, args: f.entry(idx, args).derivative(var))


def diff_eq_residuals(system):
    """Residuals of d/dt mu_t = kappa (.) mu_t and d/dt mu_t = mu_t (*) kappa,
    computed in the polynomial coefficient ring; both must vanish."""
    mu_t = t_family(system)
    kap = from_cumulants(system)
    dmu = derivative_series(mu_t)
    return (series_sub(dmu, odot(kap, mu_t)),
            series_sub(dmu, star(mu_t, kap)))


def semigroup_residual(system):
    """mu at s+t minus the composition of the t- and s-families."""
    lhs = sum_parameter_family(system)
    rhs = odot(t_family(system, nvars=2, var=1), t_family(system, nvars=2, var=0))
    return series_sub(lhs, rhs)


class SymExpr:
    """Formal sum of product terms, for counting expansion terms exactly."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple(terms)

    def __add__(self, other):
        return SymExpr(self.terms + other.terms)

    def __mul__(self, other):
        return SymExpr(tuple("%s*%s" % (a, b) for a in self.terms for b in other.terms))

    def __eq__(self, other):
        return isinstance(other, SymExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return "SymExpr(%r)" % (self.terms,)


def symbolic_series(name, r=1, degree_cap=8):
    """Series whose entries are opaque indeterminates of the given name."""

    def entry(indices, args):
        out = []
        for combo in itertools.product(*(a.terms for a in args)):
            out.append("%s[%s](%s)" % (name, ",".join(map(str, indices)), ";".join(combo)))
        return SymExpr(tuple(out))

    return SeriesElement(r, 1, degree_cap, SymExpr(("%s0" % name,)), entry)


def symbolic_arguments(n):
    return tuple(SymExpr(("b%d" % (j + 1),)) for j in range(n))


def odot_term_count(n):
    """Number of expansion terms of a single composition entry."""
    f = symbolic_series("F")
    g = symbolic_series("G")
    val = odot(f, g).entry((1,) * n, symbolic_arguments(n))
    return len(val.terms)


def double_odot_terms(n):
    """Terms of ((F . G) . H); returns (total, distinct)."""
    f = symbolic_series("F")
    g = symbolic_series("G")
    h = symbolic_series("H")
    val = odot(odot(f, g), h).entry((1,) * n, symbolic_arguments(n))
    return len(val.terms), len(set(val.terms))


def _unit_label(key):
    return "e%d%d" % key


def value_to_json(v):
    if isinstance(v, BMatrix):
        return v.to_json()
    out = {}
    for exps, coeff in v.terms.items():
        if v.nvars == 1:
            label = "t^%d" % exps[0]
        else:
            label = "s^%d*t^%d" % (exps[0], exps[1])
        out[label] = coeff.to_json()
    return out


def series_table(f, degree):
    """Dense JSON export of constants and entries on matrix-unit tuples."""
    units = matrix_units(f.d)
    keys = [(a, b) for a in range(f.d) for b in range(f.d)]
    entries = {}
    for n in range(1, degree + 1):
        for idx in itertools.product(range(1, f.r + 1), repeat=n):
            table = {}
            for arg_keys in itertools.product(range(len(keys)), repeat=n):
                args = tuple(units[i] for i in arg_keys)
                label = ",".join(_unit_label(keys[i]) for i in arg_keys)
                table[label] = value_to_json(f.entry(idx, args))
            entries[",".join(map(str, idx))] = table
    return {
        "r": f.r,
        "d": f.d,
        "degree": degree,
        "constant": value_to_json(f.constant),
        "entries": entries,
    }
