"""Exact dense and sparse linear algebra over Q and Q(i).

Matrices are lists of row lists; vectors are tuples.  Scalars are anything
supporting field arithmetic with exact zero tests (``Fraction`` or
``GaussianRational``).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(r: int, c: int) -> list[list]:
    return [[ZERO] * c for _ in range(r)]


def identity(n: int) -> list[list]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def to_fraction_matrix(m) -> list[list]:
    return [[Fraction(x) for x in row] for row in m]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    bt = list(zip(*b)) if b else []
    out = []
    for i in range(n):
        ai = a[i]
        nz = [(t, ai[t]) for t in range(k) if ai[t]]
        row = []
        for j in range(m):
            col = bt[j]
            s = ZERO
            for t, x in nz:
                y = col[t]
                if y:
                    s = s + x * y
            row.append(s)
        out.append(row)
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> tuple:
    out = []
    for row in a:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return tuple(out)


def matadd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(a, s):
    return [[x * s for x in row] for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def commutator(a, b):
    return matsub(matmul(a, b), matmul(b, a))


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)


def matpow(a, k: int):
    out = identity(len(a))
    base = a
    while k:
        if k & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        k >>= 1
    return out


def trace(a):
    s = ZERO
    for i in range(len(a)):
        s = s + a[i][i]
    return s


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    # plain ints would turn into floats under true division
    a = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        pr = a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple]:
    """Basis of {x : A x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)]
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, piv):
            if row[f]:
                v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def echelon_basis(vectors: Iterable[Sequence], ncols: int) -> list[tuple]:
    """Canonical (reduced echelon) basis of the span of the vectors."""
    rows = [list(v) for v in vectors]
    if not rows:
        return []
    red, _ = rref(rows)
    return [tuple(r) for r in red]


def inverse(a: Sequence[Sequence]) -> list[list]:
    n = len(a)
    aug = [list(a[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def solve(a: Sequence[Sequence], b: Sequence) -> tuple | None:
    """One solution of A x = b, or None if inconsistent."""
    n = len(a[0]) if a else 0
    aug = [list(r) + [y] for r, y in zip(a, b)]
    red, piv = rref(aug)
    if n in piv:
        return None
    x = [ZERO] * n
    for row, p in zip(red, piv):
        x[p] = row[n]
    return tuple(x)


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == rank(basis)


def det(a: Sequence[Sequence]):
    n = len(a)
    m = [list(r) for r in a]
    d = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        piv = m[c][c]
        d = d * piv
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / piv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return d


def leading_minors(a: Sequence[Sequence]) -> list:
    """Leading principal minors of a square matrix (exact)."""
    n = len(a)
    m = [list(r) for r in a]
    out = []
    d = ONE
    for c in range(n):
        piv = m[c][c]
        if not piv:
            # fall back to direct determinants once a zero pivot appears
            out.extend(det([row[:k] for row in a[:k]]) for k in range(c + 1, n + 1))
            return out
        d = d * piv
        out.append(d)
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / piv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return out


def is_positive_definite(a: Sequence[Sequence]) -> bool:
    """Sylvester's criterion for a symmetric rational matrix."""
    return all(x > 0 for x in leading_minors(a))


def is_positive_semidefinite(a: Sequence[Sequence]) -> bool:
    """Exact test by symmetric elimination with diagonal pivots."""
    m = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in a]
    live = list(range(len(m)))
    while live:
        p = next((i for i in live if m[i][i]), None)
        if p is None:
            # all remaining diagonal entries vanish: PSD only if the block is zero
            return all(not m[i][j] for i in live for j in live)
        if m[p][p] < 0:
            return False
        live.remove(p)
        for i in live:
            f = m[i][p] / m[p][p]
            if f:
                for j in live:
                    m[i][j] -= f * m[p][j]
    return True


class SparseEchelon:
    """Incremental elimination over sparse dict vectors.

    Vectors are dicts ``key -> scalar``.  Each inserted vector carries a
    tag combination so that dependencies (kernel vectors) can be read off.
    """

    def __init__(self):
        self.rows: dict = {}     # pivot key -> (vector, combination)
        self.order: list = []

    def reduce(self, vec: dict, comb: dict | None = None) -> tuple[dict, dict]:
        vec = dict(vec)
        comb = dict(comb or {})
        # rows are kept reduced on every pivot column, so one pass suffices
        for key in [k for k in vec if k in self.rows]:
            f = vec.get(key)
            if not f:
                continue
            rv, rc = self.rows[key]
            for k, x in rv.items():
                w = vec.get(k, 0) - f * x
                if w:
                    vec[k] = w
                else:
                    vec.pop(k, None)
            for k, x in rc.items():
                w = comb.get(k, 0) - f * x
                if w:
                    comb[k] = w
                else:
                    comb.pop(k, None)
        return vec, comb

    def add(self, vec: dict, comb: dict | None = None) -> dict | None:
        """Insert; returns the dependency combination if ``vec`` was dependent."""
        v, c = self.reduce(vec, comb)
        if not v:
            return c
        key = min(v)
        piv = v[key]
        v = {k: x / piv for k, x in v.items()}
        c = {k: x / piv for k, x in c.items()}
        # keep the table fully reduced on pivot columns
        for pk, (rv, rc) in self.rows.items():
            f = rv.get(key)
            if f:
                for k, x in v.items():
                    w = rv.get(k, 0) - f * x
                    if w:
                        rv[k] = w
                    else:
                        rv.pop(k, None)
                for k, x in c.items():
                    w = rc.get(k, 0) - f * x
                    if w:
                        rc[k] = w
                    else:
                        rc.pop(k, None)
        self.rows[key] = (v, c)
        self.order.append(key)
        return None

    def __len__(self):
        return len(self.rows)


def sparse_kernel(images: Sequence[dict]) -> list[dict]:
    """Kernel of the map sending basis vector j to ``images[j]``.

    Returns kernel vectors as dicts ``j -> coefficient``.
    """
    ech = SparseEchelon()
    out = []
    for j, img in enumerate(images):
        dep = ech.add(img, {j: ONE})
        if dep is not None:
            out.append(dep)
    return out


def sparse_rref(vectors: Sequence[dict], key_order: Sequence) -> list[dict]:
    """Canonical reduced echelon basis of the span of sparse vectors.

    ``key_order`` fixes the column order (pivots are leftmost nonzero keys).
    """
    pos = {k: i for i, k in enumerate(key_order)}
    rows = [dict(v) for v in vectors if v]
    basis: list[dict] = []
    pivots: list = []
    for v in rows:
        for b, p in zip(basis, pivots):
            f = v.get(p)
            if f:
                for k, x in b.items():
                    w = v.get(k, 0) - f * x
                    if w:
                        v[k] = w
                    else:
                        v.pop(k, None)
        if not v:
            continue
        p = min(v, key=pos.__getitem__)
        piv = v[p]
        v = {k: x / piv for k, x in v.items()}
        for b in basis:
            f = b.get(p)
            if f:
                for k, x in v.items():
                    w = b.get(k, 0) - f * x
                    if w:
                        b[k] = w
                    else:
                        b.pop(k, None)
        basis.append(v)
        pivots.append(p)
    order = sorted(range(len(basis)), key=lambda i: pos[pivots[i]])
    return [basis[i] for i in order]
