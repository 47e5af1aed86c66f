from fractions import Fraction

import pytest

from tamesolv import catalog as cat
from tamesolv import cxstruct as cx
from tamesolv import decide as dc
from tamesolv import linalg as la
from tamesolv.liecore import LieError, is_unimodular


def test_registry_builds_and_validates():
    for name in cat.REGISTRY:
        e = cat.build(name)
        e.validate()
        if e.J is not None:
            assert cx.is_integrable(e.g, e.J), name
    with pytest.raises(KeyError):
        cat.build("nope")


def test_table_entries_ids_unique(table_entries):
    ids = [e.id for e in table_entries]
    assert len(ids) == len(set(ids)) == 24


def test_ot_unimodularity():
    for s in range(1, 5):
        assert is_unimodular(cat.build_OT(s, 1).g)
    assert is_unimodular(cat.build_OT(2, 2).g)
    with pytest.raises(cat.NotUnimodular):
        cat.build_OT(1, 1, b=[[Fraction(1, 2)]])
    with pytest.raises(ValueError):
        cat.build_OT(0, 1)


def test_ot_dimensions_and_split():
    e = cat.build_OT(3, 2)
    assert e.g.dim == 10
    assert e.subspaces["h"].is_ideal() and e.subspaces["h"].is_abelian()
    assert e.subspaces["s"].is_subalgebra()


def test_zero_parameters():
    with pytest.raises(cat.ZeroParameter):
        cat.build_aa6(0, 0)
    with pytest.raises(cat.ZeroParameter):
        cat.build_C_semidirect_C2m(1, a=[0])
    with pytest.raises(cat.ZeroParameter):
        cat.build_yamada(0)
    with pytest.raises(ValueError):
        cat.build_C_semidirect_C2m(2, a=[1])


def test_aff_validation():
    # e1 e1 = e1, e1 e2 = e2 but e2 e1 = 0
    with pytest.raises(cat.NotCommutative):
        cat.build_aff([[[1, 0], [0, 1]], [[0, 0], [0, 0]]])
    # commutative, e1 e1 = e2, e1 e2 = e1, e2 e2 = 0: (e1 e1) e2 = 0 but e1 (e1 e2) = e2
    with pytest.raises(cat.NotAssociative):
        cat.build_aff([[[0, 1], [1, 0]], [[1, 0], [0, 0]]])
    for name in ("aff_R", "aff_C", "aff_RR"):
        assert not is_unimodular(cat.build(name).g), name
    assert cat.build("aff_Reps").g.is_abelian()


def test_pseudo_kaehler_forms():
    for m in (1, 2):
        e = cat.build_C_semidirect_C2m(m)
        w = e.forms["pseudo_kaehler"]
        assert not e.g.d(w)
        assert cx.J_star(e.J, w) == w
        s = dc.gram_of_form(e.J, w)
        assert not la.is_positive_definite(s)
        assert la.det(s) != 0      # nondegenerate, indefinite


def test_kaehler_form_on_tau_tau_prime():
    e = cat.build_tau_tau_prime_30()
    w = e.forms["kaehler"]
    assert not e.g.d(w) and dc.tames(e.J, w)


def test_yamada_shape():
    e = cat.build_yamada()
    assert e.g.dim == 28
    assert is_unimodular(e.g)
    assert e.subspaces["s"].dim == 4 and e.subspaces["h"].dim == 24


def test_expectation_sources(table_entries):
    for e in table_entries:
        assert e.expected, e.id
        for k, x in e.expected.items():
            assert x.source, (e.id, k)


def test_nonintegrable_helper():
    g, J = cat.build_heisenberg_R_nonintegrable()
    assert not cx.is_integrable(g, J)
    with pytest.raises(LieError):
        cat.CatalogEntry("bad", {}, g, J).validate()
