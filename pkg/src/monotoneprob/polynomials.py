"""Exact polynomial helpers: Vandermonde fits and matrix-coefficient polynomials.

Interpolation is always through the nodes 1..n with a forced zero constant
term; the node-inverse is solved once per size by Gaussian elimination over
the rationals and cached.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import BMatrix, Q


@lru_cache(maxsize=None)
def _zero_constant_inverse(n):
    """Inverse of the Vandermonde system V[j][m] = (j+1)^(m+1), 0 <= j,m < n."""
    aug = [[Q((j + 1) ** (m + 1)) for m in range(n)] + [Q(1 if c == j else 0) for c in range(n)]
           for j in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [e * inv for e in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [e - f * p for e, p in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def zero_constant_scalar_coeffs(values):
    """Coefficients (c_1, ..., c_n) of the unique degree <= n polynomial with
    zero constant term passing through the given values at 1..n."""
    n = len(values)
    inv = _zero_constant_inverse(n)
    values = [Q(v) for v in values]
    return tuple(sum(inv[m][j] * values[j] for j in range(n)) for m in range(n))


def zero_constant_matrix_coeffs(values):
    """Matrix version of the same fit; values are BMatrix at nodes 1..n."""
    n = len(values)
    inv = _zero_constant_inverse(n)
    out = []
    for m in range(n):
        acc = values[0].scale(inv[m][0])
        for j in range(1, n):
            acc = acc + values[j].scale(inv[m][j])
        out.append(acc)
    return tuple(out)


class MPoly:
    """Polynomial in a fixed number of variables with matrix coefficients.

    Coefficient multiplication is matrix multiplication, so products keep
    their operand order.  Zero coefficients are never stored.
    """

    __slots__ = ("nvars", "dim", "terms", "_hash")

    def __init__(self, nvars, dim, terms):
        self.nvars = nvars
        self.dim = dim
        clean = {}
        for exps, coeff in terms.items():
            if not coeff.is_zero():
                clean[tuple(exps)] = coeff
        self.terms = clean
        self._hash = None

    @staticmethod
    def constant(mat, nvars=1):
        return MPoly(nvars, mat.dim, {(0,) * nvars: mat})

    @staticmethod
    def zero(dim, nvars=1):
        return MPoly(nvars, dim, {})

    @staticmethod
    def variable(var, dim, nvars=1):
        exps = tuple(1 if i == var else 0 for i in range(nvars))
        return MPoly(nvars, dim, {exps: BMatrix.identity(dim)})

    @staticmethod
    def from_univariate(coeffs):
        """coeffs[i] is the BMatrix coefficient of t^i."""
        dim = coeffs[0].dim
        return MPoly(1, dim, {(i,): c for i, c in enumerate(coeffs)})

    @staticmethod
    def from_scalar_poly(scalar_terms, mat, nvars):
        """Polynomial (sum of q * monomial) times a fixed matrix."""
        return MPoly(nvars, mat.dim,
                     {exps: mat.scale(q) for exps, q in scalar_terms.items() if q != 0})

    def _promote(self, other):
        if isinstance(other, BMatrix):
            return MPoly.constant(other, self.nvars)
        return other

    def __add__(self, other):
        other = self._promote(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms[exps] + coeff if exps in terms else coeff
        return MPoly(self.nvars, self.dim, terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._promote(other))

    def __rsub__(self, other):
        return self._promote(other) + (-self)

    def __neg__(self):
        return MPoly(self.nvars, self.dim, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._promote(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                terms[exps] = terms[exps] + prod if exps in terms else prod
        return MPoly(self.nvars, self.dim, terms)

    def __rmul__(self, other):
        other = self._promote(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return other.__mul__(self)

    def scale(self, q):
        return MPoly(self.nvars, self.dim, {e: c.scale(q) for e, c in self.terms.items()})

    def coefficient(self, exps):
        if isinstance(exps, int):
            exps = (exps,)
        return self.terms.get(tuple(exps), BMatrix.zero(self.dim))

    def derivative(self, var=0):
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[var] == 0:
                continue
            new = list(exps)
            new[var] -= 1
            terms[tuple(new)] = coeff.scale(exps[var])
        return MPoly(self.nvars, self.dim, terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point):
        acc = BMatrix.zero(self.dim)
        for exps, coeff in self.terms.items():
            q = Q(1)
            for e, x in zip(exps, point):
                q *= Q(x) ** e
            acc = acc + coeff.scale(q)
        return acc

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, BMatrix):
            other = MPoly.constant(other, self.nvars)
        return (isinstance(other, MPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(sorted(self.terms.items()))))
        return self._hash

    def __repr__(self):
        return "MPoly(%r)" % ({e: c.to_json() for e, c in sorted(self.terms.items())},)


def binomial_expansion(coeffs):
    """Univariate c_1 x + ... + c_n x^n rewritten at x = s + t.

    Returns {(i, j): q} with i the s-power and j the t-power.
    """
    from math import comb

    out = {}
    for m, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        for i in range(m + 1):
            key = (i, m - i)
            out[key] = out.get(key, Q(0)) + Q(c) * comb(m, i)
    return out
