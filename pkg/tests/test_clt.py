import itertools
from math import comb

import pytest

from monotoneprob.algebra import (BMatrix, MatrixModel, Q, matrix_units,
                                  random_mean_zero_model)
from monotoneprob.clt import CLTQuery, MeanZeroError, clt_limit, clt_oracle
from monotoneprob.cumulants import cumulant
from monotoneprob.moments import EvaluationError, MomentSystem

ONE = BMatrix([[1]])
ZERO = BMatrix([[0]])


@pytest.fixture(scope="module")
def flip_system():
    model = MatrixModel(1, 2, (Q(1, 2), Q(1, 2)),
                        {"X": ((ZERO, ONE), (ONE, ZERO))})
    return MomentSystem.from_model(model, ["X"])


@pytest.fixture(scope="module")
def centered_system():
    model = random_mean_zero_model(9, d=2, k=2, names=("X1",))
    return MomentSystem.from_model(model, ["X1"])


def test_standardized_scalar_moments(flip_system):
    # unit variance: the even limit moments follow binom(n, n/2) / 2^(n/2)
    for n in (2, 4, 6):
        q = CLTQuery(flip_system, n, (ONE,) * n)
        expected = BMatrix([[Q(comb(n, n // 2), 2 ** (n // 2))]])
        assert clt_limit(q) == expected
        assert clt_oracle(q) == expected


def test_odd_moments_vanish(flip_system):
    for n in (1, 3, 5):
        q = CLTQuery(flip_system, n, (ONE,) * n)
        assert clt_limit(q).is_zero()
        assert clt_oracle(q).is_zero()


def test_degree_two_limit_is_second_cumulant(centered_system):
    kappa = cumulant(centered_system)
    for b1, b2 in itertools.product(matrix_units(2)[:3], repeat=2):
        q = CLTQuery(centered_system, 2, (b1, b2))
        assert clt_limit(q) == kappa.eval((1, 1), (b1, b2))


def test_dual_methods_agree_matrix_case(centered_system):
    units = matrix_units(2)
    for n in (2, 4):
        for args in itertools.product(units[:2], repeat=n):
            q = CLTQuery(centered_system, n, args)
            assert clt_limit(q) == clt_oracle(q)


def test_mean_zero_is_required():
    biased = MatrixModel(1, 2, (Q(1, 2), Q(1, 2)),
                         {"X": ((ONE, ZERO), (ZERO, ONE))})
    system = MomentSystem.from_model(biased, ["X"])
    assert not system.eval((1,), (ONE,)).is_zero()
    with pytest.raises(MeanZeroError):
        CLTQuery(system, 2, (ONE, ONE))


def test_query_validation(flip_system, system_a):
    with pytest.raises(EvaluationError):
        CLTQuery(system_a, 2, (BMatrix.identity(2),) * 2)  # r = 2 variables
    with pytest.raises(EvaluationError):
        CLTQuery(flip_system, 0, ())
    with pytest.raises(EvaluationError):
        CLTQuery(flip_system, 2, (ONE,))
