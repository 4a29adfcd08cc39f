import itertools
import random

import pytest

from monotoneprob.algebra import (BMatrix, MatrixModel, Q, matrix_units,
                                  random_matrix, random_model)
from monotoneprob.moments import (EvaluationError, FormalWord, MomentSystem,
                                  dot_moment, dot_moment_sequences, dot_system,
                                  functional_pi, mixed_moment,
                                  mixed_moment_all_paths)
from monotoneprob.partitions import (PartitionError, SetPartition,
                                     nc_partition_of_sequence,
                                     non_crossing_partitions)

ONE = BMatrix([[1]])
ZERO = BMatrix([[0]])


@pytest.fixture(scope="module")
def flip_system():
    # X = [[0,1],[1,0]] over scalar blocks: phi(X)=0 and X^2 = 1
    model = MatrixModel(1, 2, (Q(1, 2), Q(1, 2)),
                        {"X": ((ZERO, ONE), (ONE, ZERO))})
    return MomentSystem.from_model(model, ["X"])


def test_flip_moments(flip_system):
    assert flip_system.eval((1,), (ONE,)) == ZERO
    assert flip_system.eval((1, 1), (ONE, ONE)) == ONE
    assert flip_system.eval((), ()) == ONE  # empty word is the unit


def test_moment_eval_matches_literal_block_products(system_a, model_a):
    # guards the left-linearity normalization inside the evaluator
    names = sorted(model_a.variables)
    units = matrix_units(model_a.d)
    for n in range(1, 4):
        for idx in itertools.product((1, 2), repeat=n):
            for args in itertools.product(units, repeat=n):
                literal = model_a.word_expectation([names[i - 1] for i in idx], args)
                assert system_a.eval(idx, args) == literal


def test_moment_eval_validation(system_a):
    with pytest.raises(EvaluationError):
        system_a.eval((1,) * 9, (BMatrix.identity(2),) * 9)
    with pytest.raises(EvaluationError):
        system_a.eval((3,), (BMatrix.identity(2),))


def test_moment_multilinearity(system_a):
    rng = random.Random(2)
    for n in (1, 2, 3):
        idx = tuple(rng.randint(1, 2) for _ in range(n))
        args = [random_matrix(rng, 2) for _ in range(n)]
        slot = rng.randrange(n)
        total = BMatrix.zero(2)
        for coeff, key in args[slot].units():
            probe = list(args)
            probe[slot] = BMatrix.unit(2, *key)
            total = total + system_a.eval(idx, probe).scale(coeff)
        assert system_a.eval(idx, args) == total


def test_functional_pi_single_block(system_a):
    rng = random.Random(3)
    args = tuple(random_matrix(rng, 2) for _ in range(3))
    whole = SetPartition(((1, 2, 3),))
    assert functional_pi(system_a, whole, (1, 2, 1), args) == \
        system_a.eval((1, 2, 1), args)


def test_functional_pi_nested_block(system_a):
    # {{1,3},{2}}: inner value multiplies the third coefficient on the left
    rng = random.Random(4)
    b1, b2, b3 = (random_matrix(rng, 2) for _ in range(3))
    pi = SetPartition(((1, 3), (2,)))
    inner = system_a.eval((2,), (b2,))
    expected = system_a.eval((1, 1), (b1, inner * b3))
    assert functional_pi(system_a, pi, (1, 2, 1), (b1, b2, b3)) == expected


def test_functional_pi_product_of_singletons(system_a):
    rng = random.Random(5)
    b1, b2 = random_matrix(rng, 2), random_matrix(rng, 2)
    pi = SetPartition(((1,), (2,)))
    expected = system_a.eval((1,), (b1,)) * system_a.eval((2,), (b2,))
    for peel in ("first", "last"):
        assert functional_pi(system_a, pi, (1, 2), (b1, b2), peel=peel) == expected


def test_functional_pi_rejects_crossing(system_a):
    crossing = SetPartition(((1, 3), (2, 4)))
    args = (BMatrix.identity(2),) * 4
    with pytest.raises(PartitionError):
        functional_pi(system_a, crossing, (1, 1, 1, 1), args)


def test_functional_pi_peel_independence(system_a):
    rng = random.Random(6)
    for n in range(1, 6):
        for pi in non_crossing_partitions(n):
            idx = tuple(rng.randint(1, 2) for _ in range(n))
            args = tuple(random_matrix(rng, 2) for _ in range(n))
            assert functional_pi(system_a, pi, idx, args, peel="first") == \
                functional_pi(system_a, pi, idx, args, peel="last")


def test_mixed_moment_peak_formula(system_a, system_b):
    # X Y X with X < Y: the middle letter is a peak and factors out first
    rng = random.Random(7)
    b1, b2, b3 = (random_matrix(rng, 2) for _ in range(3))
    word = FormalWord.from_moment_args((1, 2, 1), (1, 1, 1), (b1, b2, b3))
    marginals = {1: system_a, 2: system_b}
    inner = system_b.eval((1,), (b2,))
    expected = system_a.eval((1, 1), (b1, inner * b3))
    assert mixed_moment(word, marginals) == expected


def test_mixed_moment_boundary_peak(system_a, system_b):
    # Y X with X < Y reduces at the first letter
    rng = random.Random(8)
    b1, b2 = random_matrix(rng, 2), random_matrix(rng, 2)
    word = FormalWord.from_moment_args((2, 1), (1, 2), (b1, b2))
    marginals = {1: system_a, 2: system_b}
    expected = system_a.eval((2,), (system_b.eval((1,), (b1,)) * b2,))
    assert mixed_moment(word, marginals) == expected


def test_mixed_moment_missing_marginal(system_a):
    word = FormalWord.from_moment_args((1, 5), (1, 1),
                                       (BMatrix.identity(2),) * 2)
    with pytest.raises(EvaluationError):
        mixed_moment(word, {1: system_a})


def test_word_reduction_matches_q_route(system_a):
    # a word over identical marginals factors along its non-crossing class
    rng = random.Random(9)
    marginals = {j: system_a for j in (1, 2, 3)}
    for n in range(1, 7):
        for _ in range(8):
            labels = tuple(rng.randint(1, 3) for _ in range(n))
            idx = tuple(rng.randint(1, 2) for _ in range(n))
            args = tuple(random_matrix(rng, 2) for _ in range(n))
            word = FormalWord.from_moment_args(labels, idx, args)
            assert mixed_moment(word, marginals) == \
                functional_pi(system_a, nc_partition_of_sequence(labels), idx, args)


def test_reduction_confluence_small(system_a, system_b):
    rng = random.Random(10)
    third = MomentSystem.from_model(random_model(33, d=2, k=2, names=("Z1", "Z2")),
                                    ["Z1", "Z2"])
    marginals = {1: system_a, 2: system_b, 3: third}
    for n in range(1, 5):
        for labels in itertools.product((1, 2, 3), repeat=n):
            idx = tuple(rng.randint(1, 2) for _ in range(n))
            args = tuple(random_matrix(rng, 2) for _ in range(n))
            word = FormalWord.from_moment_args(labels, idx, args)
            assert len(mixed_moment_all_paths(word, marginals)) == 1


def test_dot_moment_base_cases(system_a):
    ident = BMatrix.identity(2)
    assert dot_moment(system_a, 0, (1, 2), (ident, ident)) == BMatrix.zero(2)
    assert dot_moment(system_a, 1, (1, 2), (ident, ident)) == \
        system_a.eval((1, 2), (ident, ident))
    for big_n in range(5):
        b = BMatrix([[1, 2], [0, 1]])
        assert dot_moment(system_a, big_n, (1,), (b,)) == \
            system_a.eval((1,), (b,)).scale(big_n)


def test_dot_moment_methods_agree(system_a):
    units = matrix_units(2)
    for n in (1, 2, 3):
        for idx in itertools.product((1, 2), repeat=n):
            for args in itertools.product(units[:2], repeat=n):
                for big_n in range(4):
                    red = dot_moment(system_a, big_n, idx, args, "reduction")
                    qmp = dot_moment(system_a, big_n, idx, args, "qmap")
                    seq = dot_moment_sequences(system_a, big_n, idx, args) \
                        if big_n else BMatrix.zero(2)
                    assert red == qmp == seq


def test_dot_system_wraps_dot_moment(system_a):
    ds = dot_system(system_a, 3)
    ident = BMatrix.identity(2)
    assert ds.eval((1,), (ident,)) == system_a.eval((1,), (ident,)).scale(3)


def test_dot_moment_rejects_bad_method(system_a):
    with pytest.raises(EvaluationError):
        dot_moment(system_a, 2, (1,), (BMatrix.identity(2),), "bogus")
    with pytest.raises(EvaluationError):
        dot_moment(system_a, -1, (1,), (BMatrix.identity(2),))
