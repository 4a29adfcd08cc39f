"""Exact rational scalars, square matrices, and block-matrix probability spaces.

The scalar field is the rationals, kept in lowest terms at all times; there
is no floating point anywhere in this package.  The base algebra is the full
d x d rational matrix algebra, and a concrete noncommutative probability
space is realized as k x k block matrices over it, with a weighted
block-diagonal conditional expectation.
"""

from __future__ import annotations

import json
import random
import re

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q


class DimensionError(ValueError):
    """Raised when matrix or block shapes do not agree."""


class ModelFormatError(ValueError):
    """Raised when a model JSON document is malformed."""


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


def parse_rational(text):
    """Parse a canonical rational string "p/q" or "n".

    >>> parse_rational("-6/4") == Q(-3, 2)
    True
    """
    if isinstance(text, int):
        return Q(text)
    m = _RATIONAL_RE.match(text.strip()) if isinstance(text, str) else None
    if m is None:
        raise ModelFormatError("not a rational string: %r" % (text,))
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if q == 0:
        raise ModelFormatError("zero denominator in %r" % (text,))
    return Q(p, q)


def format_rational(x):
    """Canonical string form, inverse of parse_rational on canonical input."""
    return str(x)


class BMatrix:
    """Immutable square matrix over the exact rationals.

    Instances are hashable so that moment evaluators can be memoized on
    their arguments.  All arithmetic checks dimensions and is exact; the
    d <= 2 paths are unrolled because they carry the whole oracle load.
    """

    __slots__ = ("rows", "dim", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(Q(e) for e in row) for row in rows)
        d = len(rows)
        if any(len(row) != d for row in rows):
            raise DimensionError("matrix is not square")
        self.rows = rows
        self.dim = d
        self._hash = None

    @classmethod
    def _new(cls, rows, dim):
        # internal fast path: rows already canonical tuples of Q
        self = object.__new__(cls)
        self.rows = rows
        self.dim = dim
        self._hash = None
        return self

    @staticmethod
    def identity(d):
        return BMatrix(tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d)))

    @staticmethod
    def zero(d):
        return BMatrix(((0,) * d,) * d)

    @staticmethod
    def unit(d, a, b):
        """Matrix unit e_{ab} (0-indexed)."""
        return BMatrix(tuple(tuple(1 if (i, j) == (a, b) else 0 for j in range(d)) for i in range(d)))

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash(self.rows)
        return h

    def __eq__(self, other):
        return isinstance(other, BMatrix) and self.rows == other.rows

    def __add__(self, other):
        if not isinstance(other, BMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionError("dimension mismatch in +")
        if self.dim == 2:
            (a, b), (c, d) = self.rows
            (e, f), (g, h) = other.rows
            return BMatrix._new(((a + e, b + f), (c + g, d + h)), 2)
        return BMatrix._new(tuple(tuple(a + b for a, b in zip(r1, r2))
                                  for r1, r2 in zip(self.rows, other.rows)), self.dim)

    def __sub__(self, other):
        if not isinstance(other, BMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionError("dimension mismatch in -")
        if self.dim == 2:
            (a, b), (c, d) = self.rows
            (e, f), (g, h) = other.rows
            return BMatrix._new(((a - e, b - f), (c - g, d - h)), 2)
        return BMatrix._new(tuple(tuple(a - b for a, b in zip(r1, r2))
                                  for r1, r2 in zip(self.rows, other.rows)), self.dim)

    def __neg__(self):
        return BMatrix._new(tuple(tuple(-a for a in row) for row in self.rows), self.dim)

    def __mul__(self, other):
        if not isinstance(other, BMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionError("dimension mismatch in *")
        if self.dim == 2:
            (a, b), (c, d) = self.rows
            (e, f), (g, h) = other.rows
            return BMatrix._new(((a * e + b * g, a * f + b * h),
                                 (c * e + d * g, c * f + d * h)), 2)
        if self.dim == 1:
            return BMatrix._new(((self.rows[0][0] * other.rows[0][0],),), 1)
        cols = tuple(zip(*other.rows))
        return BMatrix._new(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                                  for row in self.rows), self.dim)

    def scale(self, c):
        c = Q(c)
        if self.dim == 2:
            (a, b), (d, e) = self.rows
            return BMatrix._new(((c * a, c * b), (c * d, c * e)), 2)
        return BMatrix._new(tuple(tuple(c * a for a in row) for row in self.rows), self.dim)

    def is_zero(self):
        return all(a == 0 for row in self.rows for a in row)

    def units(self):
        """Decompose into [(coefficient, (a, b))] over nonzero matrix units."""
        return [(e, (i, j)) for i, row in enumerate(self.rows)
                for j, e in enumerate(row) if e != 0]

    def __repr__(self):
        return "BMatrix(%s)" % (list(list(str(e) for e in row) for row in self.rows),)

    def to_json(self):
        return [[format_rational(e) for e in row] for row in self.rows]

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, list) or not obj:
            raise ModelFormatError("matrix must be a nonempty list of rows")
        return BMatrix(tuple(tuple(parse_rational(e) for e in row) for row in obj))


def matrix_units(d):
    """All d*d matrix units in row-major order; a basis of the algebra."""
    return tuple(BMatrix.unit(d, a, b) for a in range(d) for b in range(d))


# k x k block matrices over the base algebra are plain tuples of tuples of
# BMatrix; only the few block operations the models need are provided.

def block_mul(a, b):
    k = len(a)
    return tuple(tuple(_block_dot(a[i], b, j, k) for j in range(k)) for i in range(k))


def _block_dot(row, b, j, k):
    acc = row[0] * b[0][j]
    for l in range(1, k):
        acc = acc + row[l] * b[l][j]
    return acc


def block_add(a, b):
    return tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(a, b))


class MatrixModel:
    """A probability space (A, B, phi) of k x k block matrices over B.

    The conditional expectation is the weighted sum of diagonal blocks,
    phi(a) = sum_i w_i a_{ii}; the weights must sum to 1 so that phi
    restricts to the identity on the diagonally embedded copy of B.
    """

    def __init__(self, d, k, weights, variables):
        if d < 1 or k < 1:
            raise ModelFormatError("d and k must be positive")
        weights = tuple(Q(w) for w in weights)
        if len(weights) != k:
            raise ModelFormatError("need exactly k weights")
        if sum(weights) != 1:
            raise ModelFormatError("weights must sum to 1")
        self.d = d
        self.k = k
        self.weights = weights
        self.variables = {}
        for name, blocks in variables.items():
            blocks = tuple(tuple(b for b in row) for row in blocks)
            self._check_block_shape(blocks)
            self.variables[name] = blocks

    def _check_block_shape(self, a):
        if len(a) != self.k or any(len(row) != self.k for row in a):
            raise DimensionError("expected a %d x %d block matrix" % (self.k, self.k))
        for row in a:
            for b in row:
                if not isinstance(b, BMatrix) or b.dim != self.d:
                    raise DimensionError("blocks must be %d x %d matrices" % (self.d, self.d))

    def cond_expect(self, a):
        """phi(a) = sum_i weights_i * a_{ii}."""
        self._check_block_shape(a)
        acc = a[0][0].scale(self.weights[0])
        for i in range(1, self.k):
            acc = acc + a[i][i].scale(self.weights[i])
        return acc

    def embed(self, b):
        """Unital embedding of B as block-diagonal matrices diag(b, ..., b)."""
        if not isinstance(b, BMatrix) or b.dim != self.d:
            raise DimensionError("can only embed %d x %d matrices" % (self.d, self.d))
        z = BMatrix.zero(self.d)
        return tuple(tuple(b if i == j else z for j in range(self.k)) for i in range(self.k))

    def word_expectation(self, names, args):
        """phi(b1 X_{n1} b2 X_{n2} ... bn X_{nn}) by literal block products."""
        if len(names) != len(args):
            raise DimensionError("need one coefficient per factor")
        if not names:
            return BMatrix.identity(self.d)
        acc = None
        for name, b in zip(names, args):
            step = block_mul(self.embed(b), self.variables[name])
            acc = step if acc is None else block_mul(acc, step)
        return self.cond_expect(acc)

    def to_json(self):
        return {
            "d": self.d,
            "k": self.k,
            "weights": [format_rational(w) for w in self.weights],
            "variables": {
                name: [[blk.to_json() for blk in row] for row in blocks]
                for name, blocks in self.variables.items()
            },
        }

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, dict):
            raise ModelFormatError("model document must be a JSON object")
        try:
            d = int(obj["d"])
            k = int(obj["k"])
            weights = [parse_rational(w) for w in obj["weights"]]
            raw_vars = obj["variables"]
        except KeyError as exc:
            raise ModelFormatError("missing model field: %s" % (exc,)) from None
        variables = {}
        for name, rows in raw_vars.items():
            if not isinstance(rows, list) or len(rows) != k:
                raise ModelFormatError("variable %r is not a %d x %d block array" % (name, k, k))
            variables[name] = tuple(
                tuple(BMatrix.from_json(blk) for blk in row) for row in rows
            )
        return MatrixModel(d, k, weights, variables)


def load_model(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelFormatError("%s: bad JSON at line %d column %d: %s"
                                   % (path, exc.lineno, exc.colno, exc.msg)) from None
    return MatrixModel.from_json(obj)


def random_matrix(rng, d, span=3):
    return BMatrix(tuple(tuple(Q(rng.randint(-span, span), rng.randint(1, 2))
                               for _ in range(d)) for _ in range(d)))


def random_model(seed, d=2, k=2, names=("X1", "X2")):
    """Deterministic seeded model; weights are fixed to (1/3, 2/3, ...normalized)."""
    rng = random.Random(seed)
    if k == 1:
        weights = (Q(1),)
    else:
        raw = tuple(Q(i + 1) for i in range(k))
        s = sum(raw)
        weights = tuple(w / s for w in raw)
    variables = {
        name: tuple(tuple(random_matrix(rng, d) for _ in range(k)) for _ in range(k))
        for name in names
    }
    return MatrixModel(d, k, weights, variables)


def centered_variable(model, name):
    """Replace X by X - embed(phi(X)) so the new variable has mean zero."""
    blocks = model.variables[name]
    mean = model.cond_expect(blocks)
    emb = model.embed(mean)
    return tuple(tuple(blocks[i][j] - emb[i][j] for j in range(model.k))
                 for i in range(model.k))


def random_mean_zero_model(seed, d=2, k=2, names=("X1",)):
    model = random_model(seed, d=d, k=k, names=names)
    centered = {name: centered_variable(model, name) for name in names}
    return MatrixModel(d, k, model.weights, centered)
