from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kces import linalg
from kces.errors import PreconditionError


def cofactor_det(m):
    """Laplace expansion along the first row; independent of elimination."""
    if len(m) == 1:
        return m[0][0]
    return sum(
        (-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]])
        for j in range(len(m))
    )


def vandermonde(nodes, length):
    return [[F(x) ** e for e in range(length)] for x in nodes]


small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[F(draw(small_ints)) for _ in range(c)] for _ in range(r)]


def test_rank_of_vandermonde():
    m = vandermonde([1, 2, 3, 4], 4)
    # product of node differences: 1*2*3*1*2*1 = 12
    assert cofactor_det(m) == 12
    assert linalg.rank(m) == 4


@pytest.mark.parametrize("m, expected", [
    ([[0] * 5 for _ in range(3)], 0),
    ([[1, 0], [0, 1]], 2),
])
def test_rank_trivial(m, expected):
    assert linalg.rank(m) == expected


@pytest.mark.parametrize("m, reduced, pivots", [
    ([[2, 4], [1, 2]], [[1, 2], [0, 0]], [0]),
    ([[1, 0], [0, 1]], [[1, 0], [0, 1]], [0, 1]),
    ([[0, 3], [0, 0]], [[0, 1], [0, 0]], [1]),
])
def test_rref(m, reduced, pivots):
    out, piv = linalg.rref(m)
    assert out == [tuple(map(F, r)) for r in reduced]
    assert piv == pivots


def test_nullspace_examples():
    assert linalg.nullspace_basis(linalg.identity(3)) == []
    assert linalg.nullspace_basis([[1, 1, 1]]) == [(-1, 1, 0), (-1, 0, 1)]
    assert linalg.nullspace_basis([], n_cols=2) == linalg.identity(2)


def test_kron():
    assert linalg.kron([1, 1], [1, -1]) == (1, -1, 1, -1)
    x = 3
    assert linalg.kron([1, x], [1, x**2]) == (1, 9, 3, 27)
    assert linalg.kron([1, 0], [1, 0]) == (1, 0, 0, 0)


def test_gram_projector():
    assert linalg.gram_projector([[1, 0]]) == [(1, 0), (0, 0)]
    assert linalg.gram_projector(linalg.identity(3)) == linalg.identity(3)
    half = F(1, 2)
    assert linalg.gram_projector([[1, 1]]) == [(half, half), (half, half)]
    with pytest.raises(PreconditionError, match="not linearly independent"):
        linalg.gram_projector([[1, 2], [2, 4]])


def test_psd_check():
    assert linalg.psd_check(linalg.identity(4))
    assert not linalg.psd_check([[1, 2], [2, 1]])
    assert linalg.psd_check([[0, 0], [0, 0]])
    assert not linalg.psd_check([[0, 1], [1, 1]])
    with pytest.raises(PreconditionError):
        linalg.psd_check([[1, 2], [0, 1]])


def test_partial_transpose_examples():
    m = [[F(4 * i + j) for j in range(4)] for i in range(4)]
    assert linalg.partial_transpose(m, [2, 2], [0, 1]) == linalg.transpose(m)
    assert linalg.partial_transpose(m, [2, 2], []) == [tuple(r) for r in m]
    bell = [1, 0, 0, 1]
    proj = [[F(a * b, 2) for b in bell] for a in bell]
    pt = linalg.partial_transpose(proj, [2, 2], [1])
    half = F(1, 2)
    assert pt == [(half, 0, 0, 0), (0, 0, half, 0), (0, half, 0, 0), (0, 0, 0, half)]
    # (0, 1, -1, 0) is an eigenvector with eigenvalue -1/2
    v = [0, 1, -1, 0]
    assert [linalg.dot(row, v) for row in pt] == [0, -half, half, 0]
    assert not linalg.psd_check(pt)
    with pytest.raises(PreconditionError):
        linalg.partial_transpose(m, [2, 3], [0])


def test_all_minors_positive():
    assert linalg.all_minors_positive(vandermonde([1, 2, 3], 3))
    assert not linalg.all_minors_positive(linalg.identity(2))
    assert not linalg.all_minors_positive([[1, 2], [3, 4]])


def test_det_matches_cofactor():
    m = [[F(2), F(-1), F(3)], [F(0), F(5), F(1, 2)], [F(7), F(1), F(-2)]]
    assert linalg.det(m) == cofactor_det(m)


def leibniz_det(m):
    n = len(m)
    total = F(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F((-1) ** inv)
        for i, p in enumerate(perm):
            term *= m[i][p]
        total += term
    return total


@given(matrices(max_rows=4, max_cols=4))
def test_det_agrees_with_leibniz(m):
    m = [row[: len(m)] for row in m][: len(m[0])]
    assert linalg.det(m) == leibniz_det(m)


@given(matrices())
def test_rank_nullity(m):
    basis = linalg.nullspace_basis(m)
    assert len(m[0]) == linalg.rank(m) + len(basis)
    for v in basis:
        assert all(linalg.dot(row, v) == 0 for row in m)


@given(matrices(max_rows=3, max_cols=4))
def test_gram_projector_properties(m):
    reduced, pivots = linalg.rref(m)
    b = reduced[: len(pivots)]
    if not b:
        return
    p = linalg.gram_projector(b)
    assert linalg.matmul(p, p) == p
    assert linalg.is_symmetric(p)
    for row in b:
        assert [linalg.dot(r, row) for r in p] == list(row)


@settings(max_examples=50)
@given(matrices(max_rows=4, max_cols=4), st.sets(st.integers(0, 1)), st.sets(st.integers(0, 1)))
def test_partial_transpose_involution_and_composition(m, a, b):
    size = 4
    m = [(row * size)[:size] for row in (m * size)[:size]]
    dims = [2, 2]
    once = linalg.partial_transpose(m, dims, a)
    assert linalg.partial_transpose(once, dims, a) == [tuple(r) for r in m]
    if not a & b:
        ab = linalg.partial_transpose(once, dims, b)
        assert ab == linalg.partial_transpose(m, dims, a | b)


@given(st.lists(small_ints, min_size=1, max_size=3),
       st.lists(small_ints, min_size=1, max_size=3),
       st.lists(small_ints, min_size=1, max_size=3))
def test_kron_associative(a, b, c):
    assert linalg.kron(linalg.kron(a, b), c) == linalg.kron(a, linalg.kron(b, c))


@given(matrices(max_rows=4, max_cols=4))
def test_psd_of_gram_matrices(m):
    gram = linalg.matmul(linalg.transpose(m), m)
    assert linalg.psd_check(gram)
    if any(gram[i][i] for i in range(len(gram))):
        neg = [tuple(-x for x in row) for row in gram]
        assert not linalg.psd_check(neg)
