from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from tamesolv.exterior import Form, monomials

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def forms(draw, dim, degree, max_terms=6):
    keys = monomials(dim, degree)
    if not keys:
        return Form.zero(dim, degree)
    chosen = draw(st.lists(st.sampled_from(keys), max_size=max_terms, unique=True))
    return Form(dim, degree, {m: draw(small_q) for m in chosen})


@st.composite
def rational_matrices(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    entries = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return [[draw(entries) for _ in range(n)] for _ in range(n)]


def q(*xs):
    return tuple(Fraction(x) for x in xs)


@pytest.fixture(scope="session")
def table_entries():
    from tamesolv import catalog
    return catalog.table_entries()
