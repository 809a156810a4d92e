import numpy as np
import pytest
from hypothesis import given, strategies as st

from spincover._oracles import naive_matmul, naive_rank
from spincover.gf2core import (GF2Mat, GF2Vec, ShapeError, all_vectors, in_span, kernel,
                               mat_inv, rank, solve, span)

from conftest import matrices, to_np, vectors


def test_vector_text_roundtrip_index_zero_first():
    v = GF2Vec.from_str("1101")
    assert v.to_list() == [1, 1, 0, 1]
    assert v[0] == 1 and v[2] == 0
    assert str(v) == "1101"
    assert v.support() == [0, 1, 3]


def test_vector_arithmetic():
    a, b = GF2Vec.from_str("1100"), GF2Vec.from_str("1010")
    assert str(a + b) == "0110"
    assert a - b == a + b
    assert a.dot(b) == 1
    assert GF2Vec.ones(4).weight() == 4
    assert not GF2Vec.zero(3)


def test_vector_shape_errors():
    with pytest.raises(ShapeError):
        GF2Vec.zero(3) + GF2Vec.zero(4)
    with pytest.raises(ValueError):
        GF2Vec.from_str("10a")
    with pytest.raises(IndexError):
        GF2Vec.zero(2)[2]


def test_all_vectors_in_bitstring_order():
    out = [str(v) for v in all_vectors(3)]
    assert out == sorted(out)
    assert len(set(out)) == 8


def test_matrix_text_and_columns():
    m = GF2Mat.from_str("110\n011\n")
    assert m.shape == (2, 3)
    assert str(m.column(1)) == "11"
    assert str(m.T) == "10\n11\n01"
    assert GF2Mat.from_columns(m.columns()) == m


def test_ragged_rows_rejected():
    with pytest.raises(ShapeError):
        GF2Mat.from_rows(["10", "1"])
    with pytest.raises(ShapeError):
        GF2Mat(2, 2, (1, 4))


def test_inverse_of_singular_is_none():
    assert mat_inv(GF2Mat.from_str("11\n11")) is None
    m = GF2Mat.from_str("11\n01")
    assert mat_inv(m) == m


def test_product_shape_mismatch():
    with pytest.raises(ShapeError):
        GF2Mat.identity(2) @ GF2Mat.identity(3)


@given(st.data())
def test_product_matches_naive_triple_loop(data):
    a = data.draw(matrices())
    b = data.draw(matrices(rows=a.cols))
    expect = naive_matmul(to_np(a), to_np(b))
    assert np.array_equal(to_np(a @ b), expect)


@given(matrices())
def test_rank_matches_naive(m):
    assert rank(m) == naive_rank(to_np(m))


@given(matrices())
def test_transpose_is_involution(m):
    assert m.T.T == m
    assert m.T.shape == (m.cols, m.rows)


@given(st.integers(1, 7).flatmap(lambda n: matrices(rows=n, cols=n)))
def test_inverse_is_two_sided(m):
    inv = mat_inv(m)
    if rank(m) < m.rows:
        assert inv is None
    else:
        eye = GF2Mat.identity(m.rows)
        assert m @ inv == eye and inv @ m == eye


@given(matrices())
def test_kernel_dimension_and_membership(m):
    ker = kernel(m)
    assert len(ker) == m.cols - rank(m)
    assert all(not (m @ x) for x in ker)
    if ker:
        assert rank(GF2Mat.from_rows([x.to_list() for x in ker], cols=m.cols)) == len(ker)


@given(st.data())
def test_solve_consistent_systems(data):
    a = data.draw(matrices())
    x = data.draw(vectors(n=a.cols))
    b = a @ x
    part, ker = solve(a, b)
    assert a @ part == b
    assert len(ker) == a.cols - rank(a)


def test_solve_inconsistent():
    assert solve(GF2Mat.from_str("11\n11"), GF2Vec.from_str("10")) is None


@given(st.data())
def test_lmul_is_form_composition(data):
    m = data.draw(matrices())
    form = data.draw(vectors(n=m.rows))
    x = data.draw(vectors(n=m.cols))
    assert m.lmul(form).dot(x) == form.dot(m @ x)


def test_span_and_membership():
    basis = [GF2Vec.from_str("110"), GF2Vec.from_str("011")]
    sp = span(basis)
    assert len(sp) == 4
    assert in_span(GF2Vec.from_str("101"), basis)
    assert not in_span(GF2Vec.from_str("100"), basis)
