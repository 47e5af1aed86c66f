"""Lie algebras given by exact structure constants.

Convention: on 1-forms the Chevalley-Eilenberg differential is
``d(a)(X, Y) = -a([X, Y])``, extended to higher degree as a graded
derivation (equivalently, by the Koszul formula).
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import linalg as la
from .exterior import Form, indices_of, wedge_sign


class LieError(ValueError):
    pass


class JacobiViolation(LieError):
    def __init__(self, triple, value):
        super().__init__(f"Jacobi identity fails on basis triple {triple}: {value}")
        self.triple = triple
        self.value = value


class NotSolvable(LieError):
    pass


class NotNilpotent(LieError):
    pass


class ThetaNotClosed(LieError):
    pass


class ThetaZero(LieError):
    pass


Vec = tuple


def _vec(v, n) -> Vec:
    v = tuple(v)
    if len(v) != n:
        raise ValueError(f"vector of length {len(v)} in dimension {n}")
    return v


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q with a named basis.

    ``brackets`` maps index pairs ``(i, j)`` to ``{k: c^k_ij}``; the
    antisymmetric partner is filled in automatically.
    """

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], Mapping[int, object]],
                 names: Sequence[str] | None = None, check: bool = True):
        self.dim = dim
        self.names = tuple(names) if names is not None else tuple(f"e{i + 1}" for i in range(dim))
        if len(self.names) != dim:
            raise ValueError("wrong number of basis names")
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), terms in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i}, {j}) out of range")
            if i == j:
                if any(Fraction(c) for c in terms.values()):
                    raise ValueError(f"[e{i + 1}, e{i + 1}] must vanish")
                continue
            key, sgn = ((i, j), 1) if i < j else ((j, i), -1)
            row = table.setdefault(key, {})
            for k, c in terms.items():
                c = Fraction(c) * sgn
                if not 0 <= k < dim:
                    raise ValueError(f"bracket target {k} out of range")
                w = row.get(k, 0) + c
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
        self._table = {k: v for k, v in table.items() if v}
        self._dcache: dict[int, Form] = {}
        if check:
            ok, triple, value = check_jacobi(self)
            if not ok:
                raise JacobiViolation(triple, value)

    # -- construction helpers ------------------------------------------------
    @classmethod
    def from_differentials(cls, names: Sequence[str], diffs: Mapping[int, Form], check=True):
        """Build from the differentials of the dual basis 1-forms.

        ``diffs[k]`` is d(e^k); missing entries are closed.  Uses
        c^k_ij = -d(e^k)(e_i, e_j).
        """
        n = len(names)
        br: dict[tuple[int, int], dict[int, Fraction]] = {}
        for k, f in diffs.items():
            if f.degree != 2 or f.dim != n:
                raise ValueError("differentials must be 2-forms of the right dimension")
            for m, c in f.items():
                i, j = indices_of(m)
                br.setdefault((i, j), {})[k] = -c
        return cls(n, br, names, check=check)

    def structure_constants(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {k: dict(v) for k, v in self._table.items()}

    def c(self, i: int, j: int, k: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self._table.get((i, j), {}).get(k, Fraction(0))
        return -self._table.get((j, i), {}).get(k, Fraction(0))

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), {}))
        return {k: -v for k, v in self._table.get((j, i), {}).items()}

    def index(self, name: str) -> int:
        return self.names.index(name)

    def e(self, i: int | str) -> Vec:
        if isinstance(i, str):
            i = self.index(i)
        return tuple(Fraction(1) if t == i else Fraction(0) for t in range(self.dim))

    # -- brackets --------------------------------------------------------------
    def bracket(self, u: Sequence, v: Sequence) -> Vec:
        n = self.dim
        u = _vec(u, n)
        v = _vec(v, n)
        out = [Fraction(0)] * n
        for (i, j), terms in self._table.items():
            a = u[i] * v[j] - u[j] * v[i] if (u[i] or u[j]) and (v[i] or v[j]) else 0
            if a:
                for k, c in terms.items():
                    out[k] = out[k] + a * c
        return tuple(out)

    def ad(self, u: Sequence) -> list[list]:
        """Matrix of ad_u: column j is [u, e_j]."""
        n = self.dim
        cols = [self.bracket(u, self.e(j)) for j in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    @cached_property
    def ad_basis(self) -> list[list[list]]:
        return [self.ad(self.e(i)) for i in range(self.dim)]

    def ad_restricted(self, u: Sequence, sub: "Subspace") -> list[list]:
        """Matrix of ad_u on an ad_u-invariant subspace, in its basis."""
        cols = [sub.coordinates(self.bracket(u, b)) for b in sub.basis]
        return la.transpose(cols) if cols else []

    # -- differential ----------------------------------------------------------
    def _d_one(self, k: int) -> Form:
        store = {}
        for (i, j), terms in self._table.items():
            c = terms.get(k)
            if c:
                store[(1 << i) | (1 << j)] = -c
        return Form(self.dim, 2, store)

    def _d_monomial(self, mask: int) -> Form:
        f = self._dcache.get(mask)
        if f is not None:
            return f
        n = self.dim
        idx = indices_of(mask)
        deg = len(idx)
        if deg == 0:
            out = Form.zero(n, 1)
        elif deg == n:
            out = Form.zero(n, n)
        else:
            store: dict[int, object] = {}
            # d(e^{i1} ^ ... ^ e^{ik}) = sum_p (-1)^p e^{i1..} ^ d e^{ip} ^ ...
            for p, i in enumerate(idx):
                rest = mask & ~(1 << i)
                before = mask_below(rest, i)
                after = rest & ~before
                sgn_p = -1 if p & 1 else 1
                for m2, c in self._d_one(i).items():
                    s1 = wedge_sign(before, m2)
                    if not s1:
                        continue
                    s2 = wedge_sign(before | m2, after)
                    if not s2:
                        continue
                    key = before | m2 | after
                    w = store.get(key, 0) + sgn_p * s1 * s2 * c
                    if w:
                        store[key] = w
                    else:
                        store.pop(key, None)
            out = Form._raw(n, deg + 1, store)
        self._dcache[mask] = out
        return out

    def d(self, a: Form) -> Form:
        """Chevalley-Eilenberg differential of an invariant form."""
        if a.dim != self.dim:
            raise ValueError(f"dimension mismatch: form dim {a.dim}, algebra dim {self.dim}")
        n = self.dim
        if a.degree >= n:
            return Form.zero(n, n)
        store: dict[int, object] = {}
        for m, c in a.items():
            for k, x in self._d_monomial(m).items():
                w = store.get(k, 0) + c * x
                if w:
                    store[k] = w
                else:
                    store.pop(k, None)
        return Form._raw(n, a.degree + 1, store)

    # -- subspaces -------------------------------------------------------------
    def span(self, vectors: Iterable[Sequence]) -> "Subspace":
        return Subspace(self, vectors)

    def whole(self) -> "Subspace":
        return Subspace(self, [self.e(i) for i in range(self.dim)])

    def zero_subspace(self) -> "Subspace":
        return Subspace(self, [])

    def bracket_spaces(self, a: "Subspace", b: "Subspace") -> "Subspace":
        return Subspace(self, [self.bracket(x, y) for x in a.basis for y in b.basis])

    @cached_property
    def derived_algebra(self) -> "Subspace":
        w = self.whole()
        return self.bracket_spaces(w, w)

    @cached_property
    def derived_series(self) -> list["Subspace"]:
        out = [self.whole()]
        while True:
            nxt = self.bracket_spaces(out[-1], out[-1])
            if nxt.dim == out[-1].dim:
                break
            out.append(nxt)
        return out

    @cached_property
    def lower_central_series(self) -> list["Subspace"]:
        w = self.whole()
        out = [w]
        while True:
            nxt = self.bracket_spaces(w, out[-1])
            if nxt.dim == out[-1].dim:
                break
            out.append(nxt)
        return out

    @cached_property
    def center(self) -> "Subspace":
        rows = []
        for j in range(self.dim):
            # [X, e_j] = 0 for all j: linear in X
            for k in range(self.dim):
                rows.append([self.c(i, j, k) for i in range(self.dim)])
        return Subspace(self, la.nullspace(rows, self.dim))

    def is_solvable(self) -> bool:
        return self.derived_series[-1].dim == 0

    def is_nilpotent(self) -> bool:
        return self.lower_central_series[-1].dim == 0

    def is_abelian(self) -> bool:
        return not self._table

    @cached_property
    def nilradical(self) -> "Subspace":
        return nilradical(self)

    def subalgebra(self, sub: "Subspace", names: Sequence[str] | None = None) -> "LieAlgebra":
        """The subalgebra ``sub`` as a Lie algebra in the basis ``sub.basis``."""
        if not sub.is_subalgebra():
            raise LieError("subspace is not closed under the bracket")
        m = sub.dim
        br = {}
        for a in range(m):
            for b in range(a + 1, m):
                w = sub.coordinates(self.bracket(sub.basis[a], sub.basis[b]))
                terms = {k: x for k, x in enumerate(w) if x}
                if terms:
                    br[(a, b)] = terms
        return LieAlgebra(m, br, names)

    def change_basis(self, p: Sequence[Sequence]) -> "LieAlgebra":
        """Same algebra in the basis f_j = sum_i p[i][j] e_i."""
        n = self.dim
        pinv = la.inverse(p)
        cols = [tuple(p[i][j] for i in range(n)) for j in range(n)]
        br = {}
        for a in range(n):
            for b in range(a + 1, n):
                w = la.matvec(pinv, self.bracket(cols[a], cols[b]))
                terms = {k: x for k, x in enumerate(w) if x}
                if terms:
                    br[(a, b)] = terms
        return LieAlgebra(n, br, [f"f{i + 1}" for i in range(n)])

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, nonzero brackets={len(self._table)})"


def mask_below(mask: int, i: int) -> int:
    return mask & ((1 << i) - 1)


class Subspace:
    """Subspace of a Lie algebra with a canonical reduced-echelon basis."""

    def __init__(self, parent: LieAlgebra, vectors: Iterable[Sequence]):
        self.parent = parent
        vecs = [tuple(Fraction(x) for x in _vec(v, parent.dim)) for v in vectors]
        self.basis: tuple[Vec, ...] = tuple(la.echelon_basis(vecs, parent.dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return la.in_span(self.basis, tuple(v))

    def contains(self, other: "Subspace") -> bool:
        return all(b in self for b in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.parent, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        a, b = list(self.basis), list(other.basis)
        if not a or not b:
            return Subspace(self.parent, [])
        # x = sum s_i a_i = sum t_j b_j
        n = self.parent.dim
        rows = [[a[i][k] for i in range(len(a))] + [-b[j][k] for j in range(len(b))] for k in range(n)]
        sols = la.nullspace(rows, len(a) + len(b))
        vecs = []
        for s in sols:
            v = [Fraction(0)] * n
            for i in range(len(a)):
                if s[i]:
                    v = [x + s[i] * y for x, y in zip(v, a[i])]
            vecs.append(v)
        return Subspace(self.parent, vecs)

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of v in ``self.basis`` (error if v is outside)."""
        if not self.basis:
            if any(v):
                raise ValueError("vector not in subspace")
            return ()
        a = [[b[k] for b in self.basis] for k in range(self.parent.dim)]
        x = la.solve(a, v)
        if x is None:
            raise ValueError("vector not in subspace")
        return x

    def is_subalgebra(self) -> bool:
        g = self.parent
        return all(g.bracket(x, y) in self for i, x in enumerate(self.basis) for y in self.basis[i + 1:])

    def is_ideal(self) -> bool:
        g = self.parent
        return all(g.bracket(g.e(i), y) in self for i in range(g.dim) for y in self.basis)

    def is_abelian(self) -> bool:
        g = self.parent
        return all(not any(g.bracket(x, y)) for i, x in enumerate(self.basis) for y in self.basis[i + 1:])

    def is_nilpotent_subalgebra(self) -> bool:
        if not self.is_subalgebra():
            return False
        cur = self
        while cur.dim:
            nxt = self.parent.bracket_spaces(self, cur)
            if nxt.dim == cur.dim:
                return False
            cur = nxt
        return True

    def is_solvable_subalgebra(self) -> bool:
        if not self.is_subalgebra():
            return False
        cur = self
        while cur.dim:
            nxt = self.parent.bracket_spaces(cur, cur)
            if nxt.dim == cur.dim:
                return False
            cur = nxt
        return True

    def properties(self) -> dict[str, bool]:
        return {"is_subalgebra": self.is_subalgebra(), "is_ideal": self.is_ideal(),
                "is_abelian": self.is_abelian()}

    def complement_basis(self) -> list[Vec]:
        """Coordinate vectors completing ``self.basis`` to a basis."""
        g = self.parent
        out = []
        cur = list(self.basis)
        for i in range(g.dim):
            e = g.e(i)
            if not la.in_span(cur, e):
                cur.append(e)
                out.append(e)
        return out

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.parent.dim})"


# ---------------------------------------------------------------------------

def check_jacobi(g: LieAlgebra) -> tuple[bool, tuple | None, tuple | None]:
    """Return (ok, first violating basis triple, the nonzero cyclic sum)."""
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = g.e(i), g.e(j), g.e(k)
                s1 = g.bracket(ei, g.bracket(ej, ek))
                s2 = g.bracket(ej, g.bracket(ek, ei))
                s3 = g.bracket(ek, g.bracket(ei, ej))
                tot = tuple(a + b + c for a, b, c in zip(s1, s2, s3))
                if any(tot):
                    return False, (i, j, k), tot
    return True, None, None


def ce_d(g: LieAlgebra, a: Form) -> Form:
    return g.d(a)


def derived_and_central_series(g: LieAlgebra) -> tuple[list[Subspace], list[Subspace]]:
    """Derived and lower central series, each ending where it stabilizes."""
    return list(g.derived_series), list(g.lower_central_series)


def is_ad_nilpotent(g: LieAlgebra, x: Sequence) -> bool:
    return la.is_zero_matrix(la.matpow(g.ad(x), g.dim))


def nilradical(g: LieAlgebra, seed: int = 0, attempts: int = 8) -> Subspace:
    """Maximal nilpotent ideal of a solvable algebra.

    For solvable g the ad-nilpotent elements form exactly the nilradical,
    and X is ad-nilpotent iff tr(ad_X ad_Y^k) = 0 for all Y and k (Lie's
    theorem).  Imposing this for a few random Y gives a space containing
    the nilradical; the result is accepted only once every basis vector is
    verified ad-nilpotent, which pins it down exactly.
    """
    if not g.is_solvable():
        raise NotSolvable("derived series does not reach 0")
    n = g.dim
    rng = random.Random(seed)
    adb = g.ad_basis
    for _ in range(attempts):
        rows = []
        for _y in range(2):
            y = [Fraction(rng.randint(-7, 7)) for _ in range(n)]
            ady = la.zeros(n, n)
            for i, c in enumerate(y):
                if c:
                    ady = la.matadd(ady, la.matscale(adb[i], c))
            p = la.identity(n)
            for _k in range(n):
                # tr(ad_X P) is linear in X: sum_i x_i tr(ad_{e_i} P)
                rows.append([la.trace(la.matmul(adb[i], p)) for i in range(n)])
                p = la.matmul(p, ady)
        cand = Subspace(g, la.nullspace(rows, n))
        if all(is_ad_nilpotent(g, b) for b in cand.basis):
            return cand
    raise LieError("nilradical computation did not stabilize; increase attempts")


def is_unimodular(g: LieAlgebra) -> bool:
    return all(la.trace(m) == 0 for m in g.ad_basis)


def closed_one_forms(g: LieAlgebra) -> list[Form]:
    """Basis of the closed 1-forms (the annihilator of [g, g])."""
    n = g.dim
    rows = [list(v) for v in g.derived_algebra.basis]
    return [Form(n, 1, {1 << i: c for i, c in enumerate(v) if c}) for v in la.nullspace(rows, n)]


def solve_twisted_closed(g: LieAlgebra, theta: Form) -> list[Form]:
    """Basis of {eta : d(eta) = eta ^ theta} for a nilpotent g.

    For nilpotent g and closed nonzero theta the twisted cohomology
    vanishes, so the answer is the line spanned by theta.
    """
    if theta.degree != 1 or theta.dim != g.dim:
        raise ValueError("theta must be a 1-form on g")
    if not g.is_nilpotent():
        raise NotNilpotent("algebra is not nilpotent")
    if theta.is_zero():
        raise ThetaZero("theta must be nonzero")
    if not g.d(theta).is_zero():
        raise ThetaNotClosed("d(theta) != 0")
    n = g.dim
    images = []
    for i in range(n):
        e = Form(n, 1, {1 << i: 1})
        images.append(dict((g.d(e) - e.wedge(theta)).items()))
    ker = la.sparse_kernel(images)
    vecs = [tuple(k.get(i, Fraction(0)) for i in range(n)) for k in ker]
    basis = la.echelon_basis(vecs, n)
    return [Form(n, 1, {1 << i: c for i, c in enumerate(v) if c}) for v in basis]


def random_conjugation(g: LieAlgebra, rng: random.Random, lo: int = -3, hi: int = 3):
    """Random invertible integer change of basis; returns (g', P)."""
    n = g.dim
    while True:
        p = [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
        if la.det(p):
            return g.change_basis(p), p


__all__ = [
    "LieAlgebra", "Subspace", "check_jacobi", "ce_d", "derived_and_central_series",
    "nilradical", "is_unimodular", "solve_twisted_closed", "closed_one_forms",
    "is_ad_nilpotent", "random_conjugation", "LieError", "JacobiViolation", "NotSolvable",
    "NotNilpotent", "ThetaNotClosed", "ThetaZero",
]
