from fractions import Fraction

from hypothesis import given, strategies as st

from conftest import rational_matrices
from tamesolv import linalg as la


def test_rref_and_nullspace():
    a = [[1, 2, 3], [2, 4, 6]]
    red, piv = la.rref([[Fraction(x) for x in r] for r in a])
    assert piv == [0]
    ker = la.nullspace(a, 3)
    assert len(ker) == 2
    for v in ker:
        assert la.matvec(a, v) == (0, 0)


@given(rational_matrices(max_n=5))
def test_inverse_when_invertible(m):
    if la.det(m):
        assert la.matmul(m, la.inverse(m)) == la.identity(len(m))


@given(rational_matrices(max_n=5))
def test_rank_nullity(m):
    n = len(m)
    assert la.rank(m) + len(la.nullspace(m, n)) == n


def test_positive_definite_by_minors():
    assert la.is_positive_definite([[2, 1], [1, 2]])
    assert not la.is_positive_definite([[1, 2], [2, 1]])
    assert not la.is_positive_definite([[0, 0], [0, 1]])
    assert la.leading_minors([[2, 1], [1, 2]]) == [2, 3]


def test_sparse_kernel_matches_dense():
    images = [{"a": 1}, {"a": 2}, {"b": 1}, {"a": 1, "b": 1}]
    ker = la.sparse_kernel(images)
    assert len(ker) == 2
    for k in ker:
        tot = {}
        for j, c in k.items():
            for key, x in images[j].items():
                tot[key] = tot.get(key, 0) + c * x
        assert not any(tot.values())


def test_solve():
    assert la.solve([[1, 0], [0, 2]], [3, 4]) == (3, 2)
    assert la.solve([[1, 0], [1, 0]], [1, 2]) is None


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_echelon_basis_is_canonical(rows):
    b1 = la.echelon_basis(rows, 3)
    b2 = la.echelon_basis(list(reversed(rows)) + rows, 3)
    assert b1 == b2


def test_positive_semidefinite_examples():
    assert la.is_positive_semidefinite([[1, 1], [1, 1]])
    assert la.is_positive_semidefinite([[0, 0], [0, 0]])
    assert not la.is_positive_semidefinite([[0, 1], [1, 0]])
    assert not la.is_positive_semidefinite([[1, 2], [2, 1]])
    assert la.is_positive_semidefinite([[0, 0, 0], [0, 2, 1], [0, 1, 1]])


@given(rational_matrices(max_n=6))
def test_semidefinite_matches_gram_construction(m):
    # M M^T is PSD; M M^T - (1 + tr) e0 e0^T is not
    g = la.matmul(m, la.transpose(m))
    assert la.is_positive_semidefinite(g)
    h = [row[:] for row in g]
    h[0][0] -= 1 + la.trace(g)
    assert not la.is_positive_semidefinite(h)
