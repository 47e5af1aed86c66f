from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import rational_matrices
from tamesolv import catalog as cat
from tamesolv import linalg as la
from tamesolv import weights as wt
from tamesolv.exterior import GaussianRational as G
from tamesolv.liecore import LieAlgebra

# [A, X] = X - Y, [A, Y] = X + Y, [X, Y] = W, [A, W] = 2W, U central:
# alpha = 1 +- i on span{X, Y} with [V_a, V_abar] = span{W} != 0
FIVE = LieAlgebra(5, {(0, 1): {1: 1, 2: -1}, (0, 2): {1: 1, 2: 1}, (1, 2): {3: 1}, (0, 3): {3: 2}},
                  ["A", "X", "Y", "W", "U"])


def M(rows):
    return [[Fraction(x) for x in r] for r in rows]


def test_jordan_chevalley_examples():
    p = wt.jordan_chevalley(M([[0, 1], [0, 0]]))
    assert p.S == M([[0, 0], [0, 0]]) and p.N == M([[0, 1], [0, 0]])
    p = wt.jordan_chevalley(M([[1, 0], [0, 2]]))
    assert p.S == M([[1, 0], [0, 2]]) and p.N == M([[0, 0], [0, 0]])
    p = wt.jordan_chevalley(M([[1, 1], [0, 1]]))
    assert p.S == M([[1, 0], [0, 1]]) and p.N == M([[0, 1], [0, 0]])


@settings(max_examples=40)
@given(rational_matrices(max_n=8))
def test_jordan_chevalley_invariants(m):
    assert wt.jordan_chevalley(m).check(m)


def test_jordan_chevalley_irrational_spectrum():
    m = M([[0, 2, 1], [1, 0, 0], [0, 0, 0]])   # eigenvalues +-sqrt(2), 0
    assert wt.jordan_chevalley(m).check(m)


def test_charpoly_and_roots():
    assert wt.charpoly(M([[0, -1], [1, 0]])) == [1, 0, 1]
    assert sorted(map(str, wt.gaussian_roots([1, 0, 1]))) == ["-1i", "1i"]
    assert wt.gaussian_roots([-2, 0, 1]) is None
    assert wt.pure_imaginary_spectrum(M([[0, -1], [1, 0]]))
    assert not wt.pure_imaginary_spectrum(M([[1, 0], [0, 0]]))


def test_weight_examples():
    r2 = cat.build_r2().g
    d = wt.weight_decomposition([r2.ad_restricted(r2.e(0), r2.nilradical)])
    assert [str(c) for c in d.characters] == ["(1)"]
    ot = cat.build_OT(1, 1)
    g = ot.g
    acts = [g.ad_restricted(x, g.nilradical) for x in ot.complement.basis]
    dual = wt.weight_decomposition(wt.dual_action(acts))
    got = {c.values[0] for c in dual.characters}
    c = Fraction(1, 3)   # catalog c_11
    assert got == {G(-1), G(Fraction(1, 2), c), G(Fraction(1, 2), -c)}
    adj = {c.values[0] for c in wt.weight_decomposition(acts).characters}
    assert adj == {-x for x in got}
    zero = wt.weight_decomposition([la.zeros(3, 3)])
    assert len(zero.spaces) == 1 and zero.spaces[0].dim == 3 and zero.characters[0].is_zero()


def test_not_nilpotent_image():
    sl2 = LieAlgebra(3, {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}})
    with pytest.raises(wt.NotNilpotentImage):
        wt.weight_decomposition(sl2.ad_basis)


def test_flag_with_different_nilpotent_targets():
    # N1: e1 -> e2, N2: e0 -> -e2 on the zero weight space
    z = la.zeros(4, 4)
    n1, n2 = la.zeros(4, 4), la.zeros(4, 4)
    n1[2][1] = Fraction(1)
    n2[2][0] = Fraction(-1)
    d = wt.weight_decomposition([n1, n2, z, z])
    assert len(d.spaces) == 1 and len(d.spaces[0].flag) == 4
    assert len(d.spaces[0].common) == 2


def _decomps(table_entries):
    for e in table_entries:
        c = e.complement if e.complement is not None else wt.cartan_complement(e.g)
        yield e.id, wt.adjoint_weights(e.g, c)


def test_weight_invariants(table_entries):
    for name, d in _decomps(table_entries):
        assert sum(w.dim for w in d.spaces) == d.dim, name
        chars = d.characters
        for ch in chars:
            assert d.find(ch.conj()) is not None, name
        for w in d.spaces:
            for m, a in zip(d.actions, w.character.values):
                # V_alpha is invariant under the full action
                for v in w.basis:
                    img = la.matvec(m, v) if d.exact else tuple(
                        sum(complex(m[i][j]) * complex(v[j]) for j in range(len(v))) for i in range(len(v)))
                    coords = img
                    if d.exact:
                        assert la.in_span([list(b) for b in w.basis], coords), name
            if d.exact:
                wb = d.find(w.character.conj())
                conj = [tuple(x.conjugate() for x in v) for v in w.basis]
                assert la.echelon_basis(conj, d.dim) == la.echelon_basis(wb.basis, d.dim), name


def test_type_I_examples():
    assert wt.is_type_I(LieAlgebra(3, {(0, 1): {2: 1}}))
    assert not wt.is_type_I(cat.build_r2().g)
    assert wt.is_type_I(cat.build_tau_tau_prime_30().g)


def test_obstruction_examples():
    r2 = cat.build_r2()
    d = wt.adjoint_weights(r2.g, r2.complement)
    alpha, path = wt.find_obstruction_character(d, wt.adjoint_bracket(r2.g), return_path=True)
    assert str(alpha) == "(1)" and len(path) == 1


def test_obstruction_doubling_step():
    d = wt.adjoint_weights(FIVE, FIVE.span([FIVE.e(0)]))
    bracket = wt.adjoint_bracket(FIVE)
    a1 = next(c for c in d.characters if c.values[0] == G(1, 1))
    assert not wt.check_obstruction(d, bracket, a1)
    alpha, path = wt.find_obstruction_character(d, bracket, start=a1, return_path=True)
    assert alpha.values == (G(2),)
    assert path[-1] == a1 + a1.conj()
    assert wt.check_obstruction(d, bracket, alpha)
    # exhaustive oracle over all characters
    good = [c for c in d.characters if wt.check_obstruction(d, bracket, c)]
    assert [c.values for c in good] == [(G(2),)]


def test_obstruction_type_I_input():
    h = LieAlgebra(3, {(0, 1): {2: 1}})
    d = wt.adjoint_weights(h, wt.cartan_complement(h))
    with pytest.raises(wt.TypeIInput):
        wt.find_obstruction_character(d, wt.adjoint_bracket(h))


def test_complement_independence():
    r2 = cat.build_r2().g
    a = wt.adjoint_weights(r2, r2.span([r2.e(0)])).characters
    b = wt.adjoint_weights(r2, r2.span([(1, 1)])).characters
    assert a == b
    ot = cat.build_OT(1, 1).g
    a = wt.adjoint_weights(ot, ot.span([ot.e(0)])).characters
    b = wt.adjoint_weights(ot, ot.span([(1, 0, 1, 0)])).characters
    assert a == b


def test_cartan_and_coordinate_complements(table_entries):
    for e in table_entries:
        if e.g.dim > 8:
            continue
        c = wt.cartan_complement(e.g)
        assert wt.is_nilpotent_complement(e.g, c), e.id
        if e.g.dim <= 6:
            assert wt.is_nilpotent_complement(e.g, wt.coordinate_complement(e.g)), e.id


def test_float_regime_used_for_irrational_weights():
    e = cat.build_aa6(1, 1)
    d = wt.adjoint_weights(e.g, e.complement)
    assert not d.exact
    assert sum(w.dim for w in d.spaces) == 6
    alpha = wt.find_obstruction_character(d, wt.adjoint_bracket(e.g))
    assert wt.check_obstruction(d, wt.adjoint_bracket(e.g), alpha)


def test_gaussian_roots_keep_large_rationals_exact():
    r = Fraction(14950550, 270729)
    # (x - r)(x^2 + 1), lowest degree first
    roots = wt.gaussian_roots([-r, 1, -r, 1])
    assert sorted(roots, key=str) == sorted([G(r), G(0, 1), G(0, -1)], key=str)
    w = G(Fraction(1588232, 90243), Fraction(1312924, 812187))
    # (x - w)(x - conj w) has rational coefficients
    p = [w.re ** 2 + w.im ** 2, -2 * w.re, Fraction(1)]
    assert set(wt.gaussian_roots(p)) == {w, w.conjugate()}
