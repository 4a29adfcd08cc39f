"""Set partitions, non-crossing and monotone partitions, and the Q map.

Ground sets are {1..n}.  A partition is *crossing* when two blocks interleave
as a < b < c < d; the nesting order V > W holds when V lies strictly between
two elements of W.  A monotone partition is an ordered partition whose block
set is non-crossing and whose order puts inner blocks after the blocks they
nest inside.

Enumeration order is lexicographic on a canonical encoding (restricted
growth strings for set partitions, block sequences for ordered ones) so that
golden files are reproducible.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .polynomials import zero_constant_scalar_coeffs


class PartitionError(ValueError):
    """Raised on malformed partitions or out-of-domain queries."""


def _check_block(block):
    block = tuple(block)
    if not block:
        raise PartitionError("blocks must be nonempty")
    if any(b < 1 for b in block) or list(block) != sorted(set(block)):
        raise PartitionError("a block is a strictly increasing tuple of positive integers")
    return block


class SetPartition:
    """Unordered partition of {1..n}; blocks are kept sorted by least element."""

    __slots__ = ("blocks", "n", "_hash", "_nc")

    def __init__(self, blocks, n=None):
        blocks = tuple(sorted((_check_block(b) for b in blocks), key=lambda b: b[0]))
        elems = [x for b in blocks for x in b]
        if len(elems) != len(set(elems)):
            raise PartitionError("blocks must be disjoint")
        cover = sorted(elems)
        if n is None:
            n = len(cover)
        if cover != list(range(1, n + 1)):
            raise PartitionError("blocks must cover {1..%d}" % n)
        self.blocks = blocks
        self.n = n
        self._hash = hash(blocks)
        self._nc = None

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return "SetPartition(%r)" % (list(map(list, self.blocks)),)

    def is_non_crossing(self):
        if self._nc is None:
            self._nc = not _has_crossing(self.blocks)
        return self._nc

    def to_json(self):
        return [list(b) for b in self.blocks]


class OrderedPartition:
    """Partition of {1..n} with a linear order on the blocks."""

    __slots__ = ("blocks", "n", "_hash")

    def __init__(self, blocks, n=None):
        blocks = tuple(_check_block(b) for b in blocks)
        SetPartition(blocks, n)  # validates disjointness and cover
        self.blocks = blocks
        self.n = n if n is not None else sum(len(b) for b in blocks)
        self._hash = hash(blocks)

    def __eq__(self, other):
        return isinstance(other, OrderedPartition) and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return "OrderedPartition(%r)" % (list(map(list, self.blocks)),)

    def underlying(self):
        return SetPartition(self.blocks, self.n)

    def reversed(self):
        return OrderedPartition(tuple(reversed(self.blocks)), self.n)

    def to_json(self):
        return [list(b) for b in self.blocks]

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, list):
            raise PartitionError("ordered partition must be a list of blocks")
        return OrderedPartition(tuple(tuple(int(x) for x in b) for b in obj))


def _blocks_cross(v, w):
    # a < b < c < d with a,c in one block and b,d in the other
    for a, c in itertools.combinations(v, 2):
        if any(a < b < c for b in w) and any(d < a or d > c for d in w):
            return True
    return False


def _has_crossing(blocks):
    return any(_blocks_cross(v, w) for v, w in itertools.combinations(blocks, 2))


def nests(v, w):
    """Whether V > W: some i, j in W satisfy i < k < j for every k of V."""
    v = _check_block(v)
    w = _check_block(w)
    if set(v) & set(w):
        raise PartitionError("nesting is only defined for disjoint blocks")
    return w[0] < v[0] and v[-1] < w[-1]


def is_monotone(op):
    """Both monotone-partition axioms: non-crossing and inner blocks later."""
    if not op.underlying().is_non_crossing():
        return False
    for i, vi in enumerate(op.blocks):
        for j, vj in enumerate(op.blocks):
            if i != j and nests(vi, vj) and not i > j:
                return False
    return True


def set_partitions(n):
    """All partitions of {1..n} in restricted-growth-string order."""
    if n < 1:
        raise PartitionError("n must be positive")

    def rec(i, blocks):
        if i > n:
            yield SetPartition(tuple(tuple(b) for b in blocks), n)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


@lru_cache(maxsize=None)
def non_crossing_partitions(n):
    """NC(n), obtained by filtering all partitions through the crossing test."""
    return tuple(p for p in set_partitions(n) if p.is_non_crossing())


def interval_blocks_of(n):
    """The n(n+1)/2 interval blocks {k, ..., k+l} of {1..n}."""
    if n < 1:
        raise PartitionError("n must be positive")
    return tuple(tuple(range(k, k + l + 1)) for k in range(1, n + 1) for l in range(n - k + 1))


def ordered_partitions(n):
    for p in set_partitions(n):
        for perm in itertools.permutations(p.blocks):
            yield OrderedPartition(perm, n)


def _nesting_successors(blocks):
    """For each block index, the indices of blocks it must precede."""
    succ = {i: [] for i in range(len(blocks))}
    for i, vi in enumerate(blocks):
        for j, vj in enumerate(blocks):
            if i != j and nests(vj, vi):
                succ[i].append(j)  # vi is outer, must come before vj
    return succ


def _linear_extensions(blocks):
    succ = _nesting_successors(blocks)
    indeg = {i: 0 for i in range(len(blocks))}
    for i in succ:
        for j in succ[i]:
            indeg[j] += 1

    order = []

    def rec():
        if len(order) == len(blocks):
            yield tuple(order)
            return
        for i in range(len(blocks)):
            if indeg[i] == 0 and i not in order:
                order.append(i)
                for j in succ[i]:
                    indeg[j] -= 1
                yield from rec()
                for j in succ[i]:
                    indeg[j] += 1
                order.pop()

    yield from rec()


def monotone_partitions(n):
    """M(n): each non-crossing block set in every order refining the nesting."""
    for p in non_crossing_partitions(n):
        for order in _linear_extensions(p.blocks):
            yield OrderedPartition(tuple(p.blocks[i] for i in order), n)


def monotone_pair_partitions(n):
    if n % 2 != 0:
        raise PartitionError("monotone pair partitions need an even ground set")
    for p in non_crossing_partitions(n):
        if all(len(b) == 2 for b in p.blocks):
            for order in _linear_extensions(p.blocks):
                yield OrderedPartition(tuple(p.blocks[i] for i in order), n)


def linear_extension_count(blocks):
    """Count linear extensions of the reverse nesting poset independently.

    Uses the standard downset recursion rather than generation, so the
    enumeration in monotone_partitions can be checked against it.
    """
    succ = _nesting_successors(blocks)
    pred = {i: frozenset(j for j in succ if i in succ[j]) for i in range(len(blocks))}
    all_idx = frozenset(range(len(blocks)))

    @lru_cache(maxsize=None)
    def count(remaining):
        if not remaining:
            return 1
        total = 0
        for i in remaining:
            if pred[i] <= (all_idx - remaining):
                total += count(remaining - {i})
        return total

    return count(all_idx)


PARTITION_KINDS = ("all", "nc", "interval", "ordered", "monotone", "monotone-pair")


def enumerate_partitions(kind, n):
    """Deterministic enumeration of the requested partition family."""
    kind = kind.lower().replace("_", "-")
    if kind in ("interval-blocks", "ib"):
        kind = "interval"
    if kind == "all":
        return list(set_partitions(n))
    if kind == "nc":
        return list(non_crossing_partitions(n))
    if kind == "interval":
        return list(interval_blocks_of(n))
    if kind == "ordered":
        return list(ordered_partitions(n))
    if kind == "monotone":
        return list(monotone_partitions(n))
    if kind == "monotone-pair":
        return list(monotone_pair_partitions(n))
    raise PartitionError("unknown partition kind %r" % (kind,))


def interpolation_blocks(v, ground):
    """The p+1 (possibly empty) gaps of v inside the linearly ordered ground.

    Virtual edges sit before the first and after the last ground element;
    an empty v yields the single block equal to the whole ground set.
    """
    ground = tuple(ground)
    if len(set(ground)) != len(ground) or list(ground) != sorted(ground):
        raise PartitionError("ground must be strictly increasing")
    v = tuple(sorted(v))
    gset = set(ground)
    if not set(v) <= gset:
        raise PartitionError("v must be a subset of the ground set")
    if not v:
        return (ground,)
    blocks = []
    prev = None
    for x in v:
        blocks.append(tuple(g for g in ground if (prev is None or g > prev) and g < x))
        prev = x
    blocks.append(tuple(g for g in ground if g > prev))
    return tuple(blocks)


def ordered_from_sequence(seq):
    """Ordered partition of positions grouped by value, largest value first."""
    seq = tuple(seq)
    if not seq:
        raise PartitionError("sequence must be nonempty")
    blocks = []
    remaining = set(range(1, len(seq) + 1))
    while remaining:
        p = max(seq[k - 1] for k in remaining)
        block = tuple(sorted(k for k in remaining if seq[k - 1] == p))
        blocks.append(block)
        remaining -= set(block)
    return OrderedPartition(tuple(blocks), len(seq))


def q_map(op):
    """Collapse an ordered partition onto a non-crossing partition.

    Blocks are processed in their given order; the k-th block splits into
    its maximal runs that are contiguous once all later blocks are deleted
    from the ground set.  Equivalently, consecutive elements x < y of a
    block stay together exactly when no earlier block occupies the open gap
    (x, y).  Partitions in monotone order are fixed points, and the map
    realizes the factorization of words over ordered independent families
    when blocks are listed outermost first.
    """
    if not isinstance(op, OrderedPartition):
        op = OrderedPartition(op)
    seen = set()
    out = []
    for block in op.blocks:
        run = [block[0]]
        for x, y in zip(block, block[1:]):
            if any(z in seen for z in range(x + 1, y)):
                out.append(tuple(run))
                run = [y]
            else:
                run.append(y)
        out.append(tuple(run))
        seen.update(block)
    return SetPartition(tuple(out), op.n)


def nc_partition_of_sequence(seq):
    """Non-crossing partition describing how a labeled word factorizes.

    The ordered partition of the sequence lists the largest label first,
    which is the block consumed first; q_map expects the last-consumed
    block first, hence the reversal.
    """
    return q_map(ordered_from_sequence(seq).reversed())


@lru_cache(maxsize=None)
def sequence_class_counts(n, big_n):
    """Tally {1..N}^n by the non-crossing partition of each sequence."""
    counts = {}
    for seq in itertools.product(range(1, big_n + 1), repeat=n):
        p = nc_partition_of_sequence(seq)
        counts[p] = counts.get(p, 0) + 1
    return counts


def a_pi_count(pi, big_n):
    """Number of sequences in {1..N}^n whose class is pi."""
    if not isinstance(pi, SetPartition):
        pi = SetPartition(pi)
    if not pi.is_non_crossing():
        raise PartitionError("counts are only defined for non-crossing partitions")
    if big_n < 0:
        raise PartitionError("N must be nonnegative")
    if big_n == 0:
        return 0
    return sequence_class_counts(pi.n, big_n).get(pi, 0)


@lru_cache(maxsize=None)
def _a_pi_polynomials(n):
    """Coefficient tuples (c_1..c_n) of the counting polynomials for NC(n).

    Each polynomial has no constant term and degree at most n; fitting the
    counts at N = 1..n and checking the prediction at N = n+1 converts the
    polynomiality assumption into a runtime assertion.
    """
    polys = {}
    tables = {big_n: sequence_class_counts(n, big_n) for big_n in range(1, n + 2)}
    for pi in non_crossing_partitions(n):
        values = [tables[big_n].get(pi, 0) for big_n in range(1, n + 2)]
        coeffs = zero_constant_scalar_coeffs(values[:n])
        predicted = sum(c * (n + 1) ** (m + 1) for m, c in enumerate(coeffs))
        if predicted != values[n]:
            raise ArithmeticError(
                "counting polynomial for %r fails its extra-point check" % (pi,))
        polys[pi] = coeffs
    return polys


def a_pi_polynomial(pi):
    if not isinstance(pi, SetPartition):
        pi = SetPartition(pi)
    if not pi.is_non_crossing():
        raise PartitionError("counting polynomials require non-crossing partitions")
    return _a_pi_polynomials(pi.n)[pi]
