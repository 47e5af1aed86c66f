import random
from fractions import Fraction

import pytest

from tamesolv import catalog as cat
from tamesolv import cxstruct as cx
from tamesolv import decide as dc
from tamesolv import linalg as la
from tamesolv.exterior import Form, evaluate
from tamesolv.liecore import LieAlgebra, random_conjugation

HEIS = LieAlgebra(3, {(0, 1): {2: 1}})


def two(n, i, j, c=1):
    return Form(n, 2, {(1 << i) | (1 << j): c})


def test_closed_two_forms_examples():
    assert len(dc.closed_two_forms(LieAlgebra(4, {}))) == 6
    # d(e^01) = d(e^02) = 0 and d(e^12) = 0 by degree, d e^2 = -e^01
    assert len(dc.closed_two_forms(HEIS)) == 3
    assert len(dc.closed_two_forms(LieAlgebra(1, {}))) == 0
    for f in dc.closed_two_forms(cat.build_OT(2, 1).g).basis:
        assert not cat.build_OT(2, 1).g.d(f)


def test_ddc_closed_examples():
    ot = cat.build_OT(2, 1)
    space = dc.ddc_closed_11_forms(ot.g, ot.J)
    # no form in the space pairs the gamma directions
    x = tuple(Fraction(int(i == 4)) for i in range(6))
    jx = la.matvec(ot.J, x)
    assert all(evaluate(f, x, jx) == 0 for f in space.basis)
    ot1 = cat.build_OT(1, 1)
    space1 = dc.ddc_closed_11_forms(ot1.g, ot1.J)
    assert len(space1) == 4     # all real (1,1)-forms on a 4-dim unimodular algebra
    std = two(4, 0, 1) + two(4, 2, 3)
    assert dc.tames(ot1.J, std)


def test_taming_gram_examples():
    J = [[0, -1], [1, 0]]
    assert dc.gram_of_form(J, two(2, 0, 1)) == [[1, 0], [0, 1]]
    assert dc.gram_of_form(J, two(2, 0, 1, -1)) == [[-1, 0], [0, -1]]
    e = cat.build_C_semidirect_C2m(1)
    w = e.forms["pseudo_kaehler"]
    assert not e.g.d(w)
    s = dc.gram_of_form(e.J, w)
    assert not la.is_positive_definite(s)
    assert not la.is_positive_definite([[-x for x in r] for r in s])


def test_verdict_soundness(table_entries):
    for e in table_entries:
        if e.J is None or e.g.dim > 12:
            continue
        v = dc.decide_taming(e.g, e.J, complement=e.complement)
        space = dc.closed_two_forms(e.g)
        assert not isinstance(v, dc.Unknown), e.id
        if isinstance(v, dc.Exists):
            assert not e.g.d(v.witness) and dc.tames(e.J, v.witness), e.id
        assert v.verify(space, e.J), e.id


def test_taming_implies_skt(table_entries):
    for e in table_entries:
        if e.J is None or e.g.dim > 12:
            continue
        t = dc.decide_taming(e.g, e.J, complement=e.complement)
        s = dc.decide_skt(e.g, e.J, complement=e.complement)
        if isinstance(t, dc.Exists):
            assert isinstance(s, dc.Exists), e.id
            w = cx.J_form(e.J, t.witness)
            assert not cx.ddc(e.g, e.J, (t.witness + w) * Fraction(1, 2))


def _conjugated(e, rng):
    g2, p = random_conjugation(e.g, rng)
    pinv = la.inverse(p)
    J2 = la.matmul(la.matmul(pinv, e.J), p)
    comp = g2.span([la.matvec(pinv, v) for v in e.complement.basis])
    return g2, J2, comp


@pytest.mark.parametrize("builder", [cat.build_s_minus1_0, lambda: cat.build_OT(2, 1)])
def test_basis_invariance(builder):
    e = builder()
    base = (dc.decide_taming(e.g, e.J).kind, dc.decide_skt(e.g, e.J).kind)
    rng = random.Random(7)
    for _ in range(3):
        g2, J2, comp = _conjugated(e, rng)
        assert cx.is_integrable(g2, J2)
        got = (dc.decide_taming(g2, J2, complement=comp).kind,
               dc.decide_skt(g2, J2, complement=comp).kind)
        assert got == base


def test_nilpotent_heisenberg_R_not_tamed():
    e = cat.build_heisenberg_R()
    v = dc.decide_taming(e.g, e.J)
    assert not isinstance(v, dc.Exists)
    assert isinstance(v, dc.NotExists) and v.verify(dc.closed_two_forms(e.g), e.J)


def test_empty_space_is_not_exists():
    space = dc.FormSpace(2, 2, (), "closed")
    v = dc._decide(LieAlgebra(2, {}), [[0, -1], [1, 0]], space, "taming", 0, None, 1, 1, {})
    assert isinstance(v, dc.NotExists) and v.verify(space, [[0, -1], [1, 0]])


def test_non_integrable_J():
    g, J = cat.build_heisenberg_R_nonintegrable()
    with pytest.raises(cx.NotIntegrableError):
        dc.decide_skt(g, J)
    v = dc.decide_taming(g, J)
    assert v.notes["integrable"] is False
    assert not isinstance(v, dc.Unknown)


def test_flat_member_of_aa6_is_kaehler():
    e = cat.build_aa6(0, 4)
    v = dc.decide_taming(e.g, e.J, complement=e.complement)
    assert isinstance(v, dc.Exists)
    assert not e.g.d(v.witness) and dc.tames(e.J, v.witness)


@pytest.mark.parametrize("ab", cat.AA6_PAIRS)
def test_aa6_degenerate_direction(ab):
    e = cat.build_aa6(*ab)
    space = dc.closed_two_forms(e.g)
    z = tuple(Fraction(int(i == 4)) for i in range(6))
    assert all(evaluate(f, z, la.matvec(e.J, z)) == 0 for f in space.basis)
    v = dc.decide_taming(e.g, e.J, complement=e.complement)
    assert isinstance(v, dc.NotExists) and v.verify(space, e.J)
    assert dc.NotExists(z, []).verify(space, e.J)


def test_thm11_examples():
    t = cat.build_torus(1)
    rep = dc.check_thm11_hypotheses(t.g, t.g.span([t.g.e(0)]), t.g.span([t.g.e(1)]), t.J)
    assert not rep["not_type_I"] and not rep["taming_obstructed"]
    y = cat.build_yamada()
    rep = dc.check_thm11_hypotheses(y.g, y.subspaces["s"], y.subspaces["h"], y.J)
    assert all(rep.values()), rep
    ot = cat.build_OT(2, 1)
    rep = dc.check_thm11_hypotheses(ot.g, ot.subspaces["s"], ot.subspaces["h"], ot.J)
    assert rep["taming_obstructed"]
    with pytest.raises(dc.SpanFailure):
        dc.check_thm11_hypotheses(ot.g, ot.subspaces["s"], ot.subspaces["s"], ot.J)


def test_prop51_examples():
    e = cat.build_s_minus1_0()
    assert dc.check_prop51_hypothesis(e.g, e.complement, e.J)
    r = cat.build_r2()
    assert not dc.check_prop51_hypothesis(r.g, r.complement, r.J)
    t = cat.build_torus(2)
    assert dc.check_prop51_hypothesis(t.g, t.g.zero_subspace(), t.J)
    with pytest.raises(dc.NotAComplement):
        dc.check_prop51_hypothesis(r.g, r.g.zero_subspace(), r.J)


def test_almost_abelian_report():
    e = cat.build_aa6(1, 1)
    rep = dc.almost_abelian_report(e.g, e.J)
    assert rep["nilradical_dim"] == 5 and rep["JX_in_nilradical"]
    assert not rep["X_JX_commute"] and rep["JZ_is_X_JY"] and rep["frame_rank"] == 6
    tt = cat.build_tau_tau_prime_30()
    rep = dc.almost_abelian_report(tt.g, tt.J, tt.forms["kaehler"])
    assert rep["X_JX_commute"] and rep["h_ad_X_invariant"]
    with pytest.raises(dc.NotAlmostAbelian):
        dc.almost_abelian_report(LieAlgebra(4, {}), cat.build_torus(2).J)


def test_abelian_obstruction_checks():
    e = cat.build_s_minus1_0()
    assert cx.is_abelian_J(e.g, e.J)
    space = dc.closed_two_forms(e.g)
    for f in space.basis:
        rep = dc.abelian_obstruction_checks(e.g, e.J, f)
        assert rep["case"] in ("A", "B")
        assert rep["V_abelian"]
    with pytest.raises(dc.JNotAbelian):
        c = cat.build_complex_r2()
        dc.abelian_obstruction_checks(c.g, c.J, two(4, 0, 1))
    t = cat.build_torus(2)
    rep = dc.abelian_obstruction_checks(t.g, t.J, two(4, 0, 1))
    assert rep["case"] == "B" and rep["V_dim"] == 0 and rep["h_dim"] == 4
    assert rep["B_symmetric"] and rep["h_centralizes_V"]
    hr = cat.build_heisenberg_R()
    with pytest.raises(ValueError):
        dc.abelian_obstruction_checks(hr.g, hr.J, two(4, 2, 3))   # d(e^34) = -e^124


def test_dual_witness_certificate():
    e = cat.build_aff_C()
    space = dc.closed_two_forms(e.g)
    grams = [dc.gram_of_form(e.J, f) for f in space.basis]
    assert all(la.trace(s) == 0 for s in grams)
    v = dc.decide_taming(e.g, e.J)
    assert isinstance(v, dc.NotExists) and v.direction is None
    assert v.verify(space, e.J)
    assert not dc.check_dual_witness(grams, la.zeros(4, 4))
    bad = la.identity(4)
    bad[0][0] = Fraction(-1)
    assert not dc.check_dual_witness(grams, bad)


def test_direction_dual_is_rank_one():
    e = cat.build_s_minus1_0()
    v = dc.decide_taming(e.g, e.J)
    x = v.direction
    assert v.dual_witness == [[a * b for b in x] for a in x]
    grams = [dc.gram_of_form(e.J, f) for f in dc.closed_two_forms(e.g).basis]
    assert dc.check_dual_witness(grams, v.dual_witness)
