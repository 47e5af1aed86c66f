"""Invariant almost-complex structures on a Lie algebra.

``J`` is stored as a matrix whose column j holds the coordinates of
``J e_j``.  On k-forms J acts by ``(J a)(X1..Xk) = (-1)^k a(JX1, .., JXk)``
and ``d^c = J d J^{-1}``, which is ``I^{-1} d I`` for the pullback action I.
Then ``d^c = i(dbar - d)`` and ``dd^c = 2i d dbar``.  A (1,0)-form w
satisfies ``w(JX) = i w(X)``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg as la
from .exterior import Form, GaussianRational, I, indices_of, pullback, wedge_sign
from .liecore import LieAlgebra, LieError


class JSquaredNotMinusId(LieError):
    pass


class NotIntegrable(UserWarning):
    pass


class NotIntegrableError(LieError):
    pass


class ComplexStructure:
    def __init__(self, g: LieAlgebra, J: Sequence[Sequence]):
        n = g.dim
        J = la.to_fraction_matrix(J)
        if len(J) != n or any(len(r) != n for r in J):
            raise ValueError(f"J must be {n}x{n}")
        if n % 2:
            raise JSquaredNotMinusId("odd-dimensional algebra carries no almost-complex structure")
        if la.matmul(J, J) != la.matscale(la.identity(n), Fraction(-1)):
            raise JSquaredNotMinusId("J^2 is not -id")
        self.g = g
        self.J = J
        self.dim = n
        self.integrable = is_integrable(g, J)

    def apply(self, v: Sequence) -> tuple:
        return la.matvec(self.J, v)

    def on_form(self, a: Form) -> Form:
        return J_form(self.J, a)

    def __repr__(self):
        return f"ComplexStructure(dim={self.dim}, integrable={self.integrable})"


def _matrix(J) -> list[list]:
    return J.J if isinstance(J, ComplexStructure) else la.to_fraction_matrix(J)


def nijenhuis(g: LieAlgebra, J, x: Sequence, y: Sequence) -> tuple:
    """N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY]."""
    return _nijenhuis(g, _matrix(J), x, y)


def _nijenhuis(g, J, x, y):
    jx, jy = la.matvec(J, x), la.matvec(J, y)
    a = g.bracket(jx, jy)
    b = g.bracket(x, y)
    c = la.matvec(J, g.bracket(jx, y))
    d = la.matvec(J, g.bracket(x, jy))
    return tuple(p - q - r - s for p, q, r, s in zip(a, b, c, d))


def _check_square(J):
    n = len(J)
    if la.matmul(J, J) != la.matscale(la.identity(n), Fraction(-1)):
        raise JSquaredNotMinusId("J^2 is not -id")


def is_integrable(g: LieAlgebra, J) -> bool:
    J = _matrix(J)
    _check_square(J)
    # algebras are immutable, so the answer can be memoized per (g, J)
    cache = g.__dict__.setdefault("_integrable_cache", {})
    key = tuple(map(tuple, J))
    if key not in cache:
        n = g.dim
        cache[key] = not any(any(_nijenhuis(g, J, g.e(i), g.e(j)))
                             for i in range(n) for j in range(i + 1, n))
    return cache[key]


def is_abelian_J(g: LieAlgebra, J) -> bool:
    J = _matrix(J)
    _check_square(J)
    n = g.dim
    cols = [tuple(J[r][j] for r in range(n)) for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if g.bracket(cols[i], cols[j]) != g.bracket(g.e(i), g.e(j)):
                return False
    return True


def J_star(J, a: Form) -> Form:
    """Pullback ``a(JX1, .., JXk)``."""
    return pullback(a, _matrix(J))


def J_form(J, a: Form) -> Form:
    """J acting on forms: ``(-1)^k a(JX1, .., JXk)``."""
    b = J_star(J, a)
    return -b if a.degree & 1 else b


def J_form_inverse(J, a: Form) -> Form:
    # J^2 = (-1)^k on k-forms
    b = J_form(J, a)
    return -b if a.degree & 1 else b


def _derivation(J, a: Form) -> Form:
    """Extend the pullback by J on 1-forms as a derivation.

    It acts on a (p,q)-form as multiplication by i(p - q).
    """
    J = _matrix(J)
    n = a.dim
    ones = [Form(n, 1, {1 << j: J[i][j] for j in range(n) if J[i][j]}) for i in range(n)]
    store: dict[int, object] = {}
    for m, c in a.items():
        idx = indices_of(m)
        for p, i in enumerate(idx):
            before = sum(1 << t for t in idx[:p])
            after = m & ~before & ~(1 << i)
            for m1, x in ones[i].items():
                s1 = wedge_sign(before, m1)
                if not s1:
                    continue
                s2 = wedge_sign(before | m1, after)
                if not s2:
                    continue
                key = before | m1 | after
                w = store.get(key, 0) + s1 * s2 * c * x
                if w:
                    store[key] = w
                else:
                    store.pop(key, None)
    return Form._raw(n, a.degree, store)


@dataclass(frozen=True)
class BigradedForm:
    form: Form
    parts: dict  # (p, q) -> Form, zero parts omitted

    def component(self, p: int, q: int) -> Form:
        return self.parts.get((p, q), Form.zero(self.form.dim, self.form.degree))

    def total(self) -> Form:
        out = Form.zero(self.form.dim, self.form.degree)
        for f in self.parts.values():
            out = out + f
        return out


def bigrade(J, a: Form) -> BigradedForm:
    """Split a form into (p,q) components.

    Uses the spectral projections of the derivation D with D = i(p-q).
    """
    k = a.degree
    a = a.complexify()
    parts = {}
    for p in range(k + 1):
        q = k - p
        comp = a
        for p2 in range(k + 1):
            if p2 == p:
                continue
            lam2 = GaussianRational(0, 2 * p2 - k)
            denom = GaussianRational(0, 2 * p - 2 * p2)
            comp = (_derivation(J, comp) - comp * lam2) / denom
        if comp:
            parts[(p, q)] = comp
    return BigradedForm(a, parts)


def type_of(J, a: Form) -> tuple[int, int] | None:
    """The bidegree of a pure-type form, None if mixed (or zero)."""
    parts = bigrade(J, a).parts
    if len(parts) == 1:
        return next(iter(parts))
    return None


def projection_10(J, a: Form) -> Form:
    """(1,0)-part of a 1-form: (a + i J a) / 2."""
    a = a.complexify()
    return (a + J_form(J, a) * I) / 2


def partial(g: LieAlgebra, J, a: Form) -> Form:
    """The (p+1, q) part of d applied to each (p,q) component."""
    out = None
    for (p, q), comp in bigrade(J, a).parts.items():
        piece = bigrade(J, g.d(comp)).component(p + 1, q)
        out = piece if out is None else out + piece
    return out if out is not None else Form.zero(a.dim, min(a.degree + 1, a.dim))


def partial_bar(g: LieAlgebra, J, a: Form) -> Form:
    out = None
    for (p, q), comp in bigrade(J, a).parts.items():
        piece = bigrade(J, g.d(comp)).component(p, q + 1)
        out = piece if out is None else out + piece
    return out if out is not None else Form.zero(a.dim, min(a.degree + 1, a.dim))


def _warn_if_not_integrable(g, J):
    if isinstance(J, ComplexStructure):
        ok = J.integrable
    else:
        ok = is_integrable(g, J)
    if not ok:
        warnings.warn("J is not integrable; type identities for d^c do not apply", NotIntegrable,
                      stacklevel=3)


def dc(g: LieAlgebra, J, a: Form, warn: bool = True) -> Form:
    """d^c = J d J^{-1}."""
    if warn:
        _warn_if_not_integrable(g, J)
    return J_form(J, g.d(J_form_inverse(J, a)))


def ddc(g: LieAlgebra, J, a: Form, warn: bool = True) -> Form:
    return g.d(dc(g, J, a, warn=warn))


def real_11_basis(J) -> list[Form]:
    """Basis of real (1,1)-forms, i.e. 2-forms fixed by the pullback along J."""
    J = _matrix(J)
    n = len(J)
    keys = [(1 << i) | (1 << j) for i in range(n) for j in range(i + 1, n)]
    pos = {m: t for t, m in enumerate(keys)}
    rows = []
    for m in keys:
        img = J_star(J, Form(n, 2, {m: 1}))
        col = [Fraction(0)] * len(keys)
        for k, c in img.items():
            col[pos[k]] = c
        col[pos[m]] -= 1
        rows.append(col)
    # rows[t] is (J* - 1) e^{key_t}; kernel of the transpose map
    mat = la.transpose(rows)
    out = []
    for v in la.nullspace(mat, len(keys)):
        out.append(Form(n, 2, {keys[t]: c for t, c in enumerate(v) if c}))
    return out


def part_11(J, a: Form) -> Form:
    """Real (1,1)-part of a real 2-form: (a + J*a) / 2."""
    if a.degree != 2:
        raise ValueError("expected a 2-form")
    return (a + J_star(J, a)) / 2


def commutes_with_J(J, m: Sequence[Sequence]) -> bool:
    J = _matrix(J)
    return la.matmul(J, m) == la.matmul(m, J)


__all__ = [
    "ComplexStructure", "JSquaredNotMinusId", "NotIntegrable", "NotIntegrableError",
    "BigradedForm", "nijenhuis", "is_integrable", "is_abelian_J", "J_star", "J_form",
    "J_form_inverse", "bigrade", "type_of", "projection_10", "partial", "partial_bar",
    "dc", "ddc", "real_11_basis", "part_11", "commutes_with_J",
]
