import random

import pytest
from hypothesis import given, strategies as st

from monotoneprob.algebra import (BMatrix, DimensionError, MatrixModel,
                                  ModelFormatError, Q, block_mul, load_model,
                                  matrix_units, parse_rational, random_matrix,
                                  random_model)

@given(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 4))
def test_rational_round_trip(p, q):
    x = Q(p, q)
    assert parse_rational(str(x)) == x


@pytest.mark.parametrize("bad", ["1/0", "0/0", "1.5", "", "a/b", "1//2", "1 / 2x"])
def test_rational_rejects(bad):
    with pytest.raises(ModelFormatError):
        parse_rational(bad)


def test_rational_accepts_plain_integers():
    assert parse_rational("-7") == Q(-7)
    assert parse_rational(3) == Q(3)
    assert parse_rational(" -6/4 ") == Q(-3, 2)


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_matrix_ring_laws(a, b, c):
    ma = BMatrix([[a, 1], [0, b]])
    mb = BMatrix([[b, a], [c, 1]])
    mc = BMatrix([[1, c], [a, b]])
    assert (ma * mb) * mc == ma * (mb * mc)
    assert ma * (mb + mc) == ma * mb + ma * mc
    assert (ma + mb) * mc == ma * mc + mb * mc
    assert ma + mb == mb + ma


def test_matrix_dimension_checks():
    with pytest.raises(DimensionError):
        BMatrix([[1, 2]])
    with pytest.raises(DimensionError):
        BMatrix([[1]]) * BMatrix([[1, 0], [0, 1]])


def test_cond_expect_zero_diagonal():
    one = BMatrix([[1]])
    zero = BMatrix([[0]])
    m = MatrixModel(1, 2, (Q(1, 2), Q(1, 2)), {})
    assert m.cond_expect(((zero, one), (one, zero))) == zero


def test_cond_expect_weighted_trace():
    m = MatrixModel(1, 2, (Q(1, 3), Q(2, 3)), {})
    a = ((BMatrix([[1]]), BMatrix([[0]])), (BMatrix([[0]]), BMatrix([[4]])))
    assert m.cond_expect(a) == BMatrix([[3]])


def test_embed_is_unital_homomorphism():
    m = MatrixModel(2, 2, (Q(1, 2), Q(1, 2)), {})
    rng = random.Random(0)
    for _ in range(5):
        b1 = random_matrix(rng, 2)
        b2 = random_matrix(rng, 2)
        assert block_mul(m.embed(b1), m.embed(b2)) == m.embed(b1 * b2)
    ident = BMatrix.identity(2)
    assert m.embed(ident) == ((ident, BMatrix.zero(2)), (BMatrix.zero(2), ident))
    for b in matrix_units(2):
        assert m.cond_expect(m.embed(b)) == b


def test_bimodularity_on_seeded_block_matrix():
    # phi(embed(b1) a embed(b2)) = b1 phi(a) b2, checked by direct products
    rng = random.Random(1)
    for d, k in [(1, 2), (2, 2), (2, 3)]:
        weights = tuple(Q(1, k) for _ in range(k))
        m = MatrixModel(d, k, weights, {})
        a = tuple(tuple(random_matrix(rng, d) for _ in range(k)) for _ in range(k))
        for b1 in matrix_units(d):
            for b2 in matrix_units(d):
                lhs = m.cond_expect(block_mul(block_mul(m.embed(b1), a), m.embed(b2)))
                assert lhs == b1 * m.cond_expect(a) * b2


def test_model_json_round_trip(tmp_path):
    m = random_model(4, d=2, k=2)
    path = tmp_path / "m.json"
    import json
    path.write_text(json.dumps(m.to_json()))
    again = load_model(path)
    assert again.to_json() == m.to_json()


def test_model_validation():
    with pytest.raises(ModelFormatError):
        MatrixModel(1, 2, (Q(1, 2), Q(1, 3)), {})  # weights must sum to 1
    with pytest.raises(ModelFormatError):
        MatrixModel.from_json({"d": 1, "k": 1, "weights": ["1/0"], "variables": {}})
    with pytest.raises(ModelFormatError):
        MatrixModel.from_json({"d": 1, "k": 1, "weights": ["1"]})


def test_no_floating_point_in_package():
    import monotoneprob
    import os
    root = os.path.dirname(monotoneprob.__file__)
    for name in os.listdir(root):
        if not name.endswith(".py"):
            continue
        text = open(os.path.join(root, name)).read()
        assert "float(" not in text, name
        assert "math.sqrt" not in text, name
