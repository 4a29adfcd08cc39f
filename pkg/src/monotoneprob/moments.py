"""Joint-moment evaluation: moment systems, the interval-block recursion,
and the word-reduction oracle for ordered independent families.

Everything is memoized aggressively: evaluating a dot moment expands into
exponentially many label sequences whose leaf moments coincide, so the leaf
cache is what makes the oracles tractable.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .algebra import BMatrix
from .partitions import (OrderedPartition, PartitionError, SetPartition,
                         nc_partition_of_sequence, sequence_class_counts)


class EvaluationError(ValueError):
    """Raised on degree-cap or index-range violations."""


class MultilinearFamily:
    """A family of multilinear functionals B^n -> B indexed by tuples.

    `empty` is the value attached to the empty index tuple (the unit for
    moment systems, zero for cumulant systems).

    Families derived from a conditional expectation are left B-linear in
    their first argument (phi(b a) = b phi(a)); the evaluator exploits this
    by normalizing the first argument to the unit before caching, so only
    truly distinct words are ever computed.  The property is itself covered
    by tests against literal block products.
    """

    def __init__(self, r, d, degree_cap, fn, empty):
        self.r = r
        self.d = d
        self.degree_cap = degree_cap
        self._fn = fn
        self.empty = empty
        self._identity = BMatrix.identity(d)
        self._memo = {}
        self._dot_memo = {}
        self._pi_memo = {}

    def eval(self, indices, args):
        indices = tuple(indices)
        args = tuple(args)
        if not indices:
            return self.empty
        if len(indices) != len(args):
            raise EvaluationError("need one argument per index")
        if len(indices) > self.degree_cap:
            raise EvaluationError("degree cap %d exceeded" % self.degree_cap)
        if any(i < 1 or i > self.r for i in indices):
            raise EvaluationError("component index out of range 1..%d" % self.r)
        first = args[0]
        if first == self._identity:
            key = (indices, args)
            hit = self._memo.get(key)
            if hit is None:
                hit = self._fn(indices, args)
                self._memo[key] = hit
            return hit
        key = (indices, (self._identity,) + args[1:])
        hit = self._memo.get(key)
        if hit is None:
            hit = self._fn(indices, key[1])
            self._memo[key] = hit
        return first * hit


class MomentSystem(MultilinearFamily):
    """Joint moments of a random vector; the empty moment is the unit."""

    def __init__(self, r, d, degree_cap, fn):
        super().__init__(r, d, degree_cap, fn, BMatrix.identity(d))

    @staticmethod
    def from_model(model, names, degree_cap=6):
        """Moments phi(b1 X_{i1} ... bn X_{in}) of model variables.

        Arbitrary arguments are expanded over the matrix-unit basis and the
        unit-basis table is computed by literal block products, so repeated
        evaluation stays cheap.
        """
        r = len(names)
        d = model.d
        table = {}

        def unit_moment(indices, unit_args):
            key = (indices, unit_args)
            hit = table.get(key)
            if hit is None:
                hit = model.word_expectation([names[i - 1] for i in indices], unit_args)
                table[key] = hit
            return hit

        def fn(indices, args):
            acc = None
            for combo in itertools.product(*(a.units() for a in args)):
                coef = 1
                units = []
                for q, (a, b) in combo:
                    coef = coef * q
                    units.append(BMatrix.unit(d, a, b))
                val = unit_moment(indices, tuple(units)).scale(coef)
                acc = val if acc is None else acc + val
            return acc if acc is not None else BMatrix.zero(d)

        return MomentSystem(r, d, degree_cap, fn)


class CumulantSystem(MultilinearFamily):
    """Same shape as a moment system but the empty value is zero."""

    def __init__(self, r, d, degree_cap, fn):
        super().__init__(r, d, degree_cap, fn, BMatrix.zero(d))


@lru_cache(maxsize=None)
def _peel_script(pi, peel):
    """Static peel plan for a non-crossing partition.

    Each step is (block positions, target): the block's value multiplies
    the left coefficient at `target`, or the running right tail when the
    block ends the remaining word (target None).  Positions are 0-based.
    """
    alive = list(range(1, pi.n + 1))
    blocks = [tuple(b) for b in pi.blocks]
    script = []
    while blocks:
        pos_rank = {p: i for i, p in enumerate(alive)}
        contiguous = [b for b in blocks
                      if pos_rank[b[-1]] - pos_rank[b[0]] == len(b) - 1]
        block = contiguous[0] if peel == "first" else contiguous[-1]
        last_rank = pos_rank[block[-1]]
        if last_rank == len(alive) - 1:
            target = None
        else:
            target = alive[last_rank + 1] - 1
        script.append((tuple(p - 1 for p in block), target))
        blocks.remove(block)
        for p in block:
            alive.remove(p)
    return tuple(script)


def functional_pi(family, pi, indices, args, peel="first"):
    """Value of the interval-block recursion A_pi on the given word.

    Blocks are peeled one interval block at a time; an inner value
    multiplies the left coefficient of the next remaining letter, and a
    value at the right end multiplies the accumulated result on the right.
    `peel` picks which contiguous block goes first ("first" or "last" in
    canonical block order); the result does not depend on the choice.
    """
    if isinstance(pi, OrderedPartition):
        pi = pi.underlying()
    elif not isinstance(pi, SetPartition):
        pi = SetPartition(pi)
    if not pi.is_non_crossing():
        raise PartitionError("the interval-block recursion needs a non-crossing partition")
    indices = tuple(indices)
    n = pi.n
    if len(indices) != n or len(args) != n:
        raise EvaluationError("word length must match the partition ground set")
    args = tuple(args)
    first = args[0]
    if first != family._identity:
        return first * functional_pi(family, pi, indices,
                                     (family._identity,) + args[1:], peel)
    key = (pi, indices, args, peel)
    memo = family._pi_memo
    hit = memo.get(key)
    if hit is not None:
        return hit
    args = list(args)
    tail = None
    for positions, target in _peel_script(pi, peel):
        value = family.eval(tuple(indices[p] for p in positions),
                            tuple(args[p] for p in positions))
        if target is None:
            tail = value if tail is None else value * tail
        else:
            args[target] = value * args[target]
    memo[key] = tail
    return tail


class FormalWord:
    """Word c0 X_{g1} c1 X_{g2} ... X_{gn} cn with generators tagged by
    (algebra label, component index) and matrix coefficients between them."""

    __slots__ = ("leading", "letters")

    def __init__(self, leading, letters):
        self.leading = leading
        self.letters = tuple((label, index, trail) for (label, index, trail) in letters)
        d = leading.dim
        if any(t.dim != d for (_, _, t) in self.letters):
            raise EvaluationError("all word coefficients must share one dimension")

    @staticmethod
    def from_moment_args(labels, indices, args):
        """Word b1 X_{i1} b2 X_{i2} ... bn X_{in} (unit trailing coefficient)."""
        n = len(indices)
        d = args[0].dim
        letters = []
        for j in range(n):
            trail = args[j + 1] if j + 1 < n else BMatrix.identity(d)
            letters.append((labels[j], indices[j], trail))
        return FormalWord(args[0], letters)


def _peak_runs(letters):
    """Maximal same-label runs that are strict peaks of the label sequence."""
    labels = [l for (l, _, _) in letters]
    runs = []
    a = 0
    while a < len(labels):
        b = a
        while b + 1 < len(labels) and labels[b + 1] == labels[a]:
            b += 1
        left_ok = a == 0 or labels[a - 1] < labels[a]
        right_ok = b == len(labels) - 1 or labels[b + 1] < labels[a]
        if left_ok and right_ok:
            runs.append((a, b))
        a = b + 1
    return runs


def _reduce_run(leading, letters, a, b, marginals):
    label = letters[a][0]
    system = marginals[label]
    left = leading if a == 0 else letters[a - 1][2]
    idx = tuple(letters[i][1] for i in range(a, b + 1))
    args = (left,) + tuple(letters[i][2] for i in range(a, b))
    value = system.eval(idx, args)
    new_trail = value * letters[b][2]
    if a == 0:
        return new_trail, letters[b + 1:]
    prev = letters[a - 1]
    return leading, letters[:a - 1] + ((prev[0], prev[1], new_trail),) + letters[b + 1:]


def mixed_moment(word, marginals, strategy="leftmost"):
    """Expectation of a word over an ordered independent family.

    Repeatedly replaces a maximal same-label run at a strict peak by its
    marginal moment (absorbed into the neighboring coefficient) until one
    label remains.  Labels are compared by their natural order; every label
    in the word needs a marginal system.
    """
    leading, letters = word.leading, word.letters
    for (label, _, _) in letters:
        if label not in marginals:
            raise EvaluationError("no marginal system for label %r" % (label,))
    while letters:
        labels = {l for (l, _, _) in letters}
        if len(labels) == 1:
            label = next(iter(labels))
            system = marginals[label]
            idx = tuple(i for (_, i, _) in letters)
            args = (leading,) + tuple(t for (_, _, t) in letters[:-1])
            return system.eval(idx, args) * letters[-1][2]
        runs = _peak_runs(letters)
        a, b = runs[0] if strategy == "leftmost" else runs[-1]
        leading, letters = _reduce_run(leading, letters, a, b, marginals)
    return leading


def mixed_moment_all_paths(word, marginals):
    """Set of values over every admissible peak choice at every step."""
    memo = {}

    def rec(leading, letters):
        if not letters:
            return {leading}
        labels = {l for (l, _, _) in letters}
        if len(labels) == 1:
            return {mixed_moment(FormalWord(leading, letters), marginals)}
        key = (leading, letters)
        hit = memo.get(key)
        if hit is None:
            hit = set()
            for (a, b) in _peak_runs(letters):
                hit |= rec(*_reduce_run(leading, letters, a, b, marginals))
            memo[key] = hit
        return hit

    return rec(word.leading, word.letters)


def dot_moment(system, big_n, indices, args, method="qmap"):
    """Moment of the sum of N ordered independent copies.

    REDUCTION expands all N^n label sequences through the word oracle;
    QMAP groups the same sequences by their non-crossing class and sums the
    interval-block values with integer multiplicities.  Both are exact and
    must agree.
    """
    indices = tuple(indices)
    args = tuple(args)
    n = len(indices)
    if big_n < 0:
        raise EvaluationError("N must be nonnegative")
    if n == 0:
        return BMatrix.identity(system.d) if big_n > 0 else BMatrix.zero(system.d)
    if big_n == 0:
        return BMatrix.zero(system.d)
    first = args[0]
    if first != system._identity:
        return first * dot_moment(system, big_n, indices,
                                  (system._identity,) + args[1:], method)
    key = (big_n, indices, args, method)
    hit = system._dot_memo.get(key)
    if hit is not None:
        return hit
    result = _dot_moment_raw(system, big_n, indices, args, method)
    system._dot_memo[key] = result
    return result


def _dot_moment_raw(system, big_n, indices, args, method):
    n = len(indices)
    if method == "reduction":
        marginals = {j: system for j in range(1, big_n + 1)}
        acc = None
        for labels in itertools.product(range(1, big_n + 1), repeat=n):
            word = FormalWord.from_moment_args(labels, indices, args)
            val = mixed_moment(word, marginals)
            acc = val if acc is None else acc + val
        return acc
    if method == "qmap":
        acc = None
        for pi, count in sequence_class_counts(n, big_n).items():
            val = functional_pi(system, pi, indices, args).scale(count)
            acc = val if acc is None else acc + val
        return acc
    raise EvaluationError("unknown dot-moment method %r" % (method,))


def dot_moment_sequences(system, big_n, indices, args):
    """Per-sequence QMAP route, kept literal for oracle cross-checks."""
    acc = None
    for seq in itertools.product(range(1, big_n + 1), repeat=len(indices)):
        pi = nc_partition_of_sequence(seq)
        val = functional_pi(system, pi, indices, args)
        acc = val if acc is None else acc + val
    return acc if acc is not None else BMatrix.zero(system.d)


def dot_system(system, big_n, method="qmap"):
    """The moment system of N.X, evaluated through dot_moment."""
    return MomentSystem(system.r, system.d, system.degree_cap,
                        lambda idx, args: dot_moment(system, big_n, idx, args, method))
