import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import forms, small_q
from tamesolv.exterior import (Form, GaussianRational, I, basis_form, complexify, evaluate, pullback,
                               wedge, wedge_sign)


def e(n, *idx, c=1):
    return basis_form(n, *idx, coeff=c)


def test_wedge_examples():
    n = 3
    assert e(n, 0) ^ e(n, 0) == Form.zero(n, 2)
    assert e(n, 0) ^ e(n, 1) == -(e(n, 1) ^ e(n, 0))
    assert (e(n, 0) + e(n, 1)) ^ e(n, 2) == e(n, 0, 2) + e(n, 1, 2)


def test_wedge_past_top_degree_is_zero():
    assert not (e(2, 0, 1) ^ e(2, 0))


def test_wedge_dimension_mismatch():
    with pytest.raises(ValueError):
        e(2, 0) ^ e(3, 0)


def test_zero_coefficients_not_stored():
    f = Form(3, 1, {1: Fraction(0), 2: Fraction(1)})
    assert len(f) == 1
    assert f - f == Form.zero(3, 1)


def test_evaluate_examples():
    w = e(2, 0, 1)
    e1, e2 = (1, 0), (0, 1)
    assert evaluate(w, e1, e2) == 1
    assert evaluate(w, e2, e1) == -1
    assert evaluate(w, e1, e1) == 0


def test_evaluate_arity():
    with pytest.raises(ValueError):
        evaluate(e(2, 0, 1), (1, 0))


def test_complexify_examples():
    f = e(2, 0).complexify()
    assert all(isinstance(c, GaussianRational) for _, c in f.items())
    assert complexify(Form.zero(3, 2)) == Form.zero(3, 2)
    h = e(2, 0, 1, c=Fraction(1, 2)).complexify()
    assert h.coeff((0, 1)) == GaussianRational(Fraction(1, 2), 0)
    assert h.conj() == h


@given(st.data())
def test_associativity(data):
    n = data.draw(st.integers(3, 12))
    d = [data.draw(st.integers(0, 2)) for _ in range(3)]
    a, b, c = (data.draw(forms(n, k)) for k in d)
    assert (a ^ b) ^ c == a ^ (b ^ c)


@given(st.data())
def test_graded_commutativity(data):
    n = data.draw(st.integers(2, 9))
    p, r = data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))
    a, b = data.draw(forms(n, p)), data.draw(forms(n, r))
    sign = -1 if (p * r) % 2 else 1
    assert a ^ b == (b ^ a) * sign


def _shuffle_eval(a, b, vecs):
    """(a^b)(v1..v_{p+q}) as the signed sum over (p,q)-shuffles."""
    p, r = a.degree, b.degree
    total = Fraction(0)
    idx = range(p + r)
    for first in itertools.combinations(idx, p):
        rest = tuple(i for i in idx if i not in first)
        perm = first + rest
        inv = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
        s = -1 if inv % 2 else 1
        total += s * evaluate(a, *[vecs[i] for i in first]) * evaluate(b, *[vecs[i] for i in rest])
    return total


@given(st.data())
def test_wedge_matches_shuffle_oracle(data):
    n = data.draw(st.integers(2, 6))
    p = data.draw(st.integers(0, 2))
    r = data.draw(st.integers(0, min(2, n - p)))
    a, b = data.draw(forms(n, p)), data.draw(forms(n, r))
    vecs = [tuple(data.draw(small_q) for _ in range(n)) for _ in range(p + r)]
    assert evaluate(a ^ b, *vecs) == _shuffle_eval(a, b, vecs)


@given(st.data())
def test_conjugation_is_algebra_involution(data):
    n = data.draw(st.integers(2, 6))
    a = data.draw(forms(n, 1)).complexify() * (1 + 2 * I)
    b = data.draw(forms(n, 2)).complexify() * (I - 3)
    assert (a ^ b).conj() == a.conj() ^ b.conj()
    assert a.conj().conj() == a


@given(st.data())
def test_evaluate_alternating(data):
    n = data.draw(st.integers(2, 6))
    a = data.draw(forms(n, 2))
    x = tuple(data.draw(small_q) for _ in range(n))
    y = tuple(data.draw(small_q) for _ in range(n))
    assert evaluate(a, x, y) == -evaluate(a, y, x)
    assert evaluate(a, x, x) == 0


def test_gaussian_rational_arithmetic():
    z = GaussianRational(Fraction(1, 2), -3)
    assert z.conjugate().conjugate() == z
    assert z * z.conjugate() == GaussianRational(Fraction(1, 4) + 9, 0)
    assert (z / z) == 1
    assert I * I == -1


def test_wedge_sign():
    assert wedge_sign(0b01, 0b10) == 1
    assert wedge_sign(0b10, 0b01) == -1
    assert wedge_sign(0b01, 0b01) == 0


def test_pullback_identity_and_swap():
    f = e(2, 0, 1)
    assert pullback(f, [[1, 0], [0, 1]]) == f
    assert pullback(f, [[0, 1], [1, 0]]) == -f


def test_wedge_function_alias():
    assert wedge(e(3, 0), e(3, 1)) == e(3, 0, 1)
