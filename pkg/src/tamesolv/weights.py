"""Jordan-Chevalley decompositions, characters and weight spaces.

Weight spaces are computed exactly over Q(i) when the relevant
characteristic polynomial splits there, and in complex floating point
otherwise.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
import sympy as sp

from . import linalg as la
from .exterior import GaussianRational, to_gaussian
from .liecore import LieAlgebra, LieError, Subspace

DEFAULT_TOL = 1e-9


class NotNilpotentImage(LieError):
    pass


class TypeIInput(LieError):
    pass


# -- polynomials (coefficient lists, lowest degree first) --------------------

def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_divmod(p, q):
    p, q = _trim(p), _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    r = list(p)
    lead = q[-1]
    while len(r) >= len(q) and r:
        f = r[-1] / lead
        k = len(r) - len(q)
        quo[k] = f
        for i, b in enumerate(q):
            r[k + i] -= f * b
        r = _trim(r)
    return _trim(quo), r


def poly_monic(p):
    p = _trim(p)
    return [c / p[-1] for c in p] if p else p


def poly_gcd(p, q):
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return poly_monic(p)


def poly_deriv(p):
    return _trim([i * c for i, c in enumerate(p)][1:])


def squarefree_part(p):
    g = poly_gcd(p, poly_deriv(p))
    return poly_monic(poly_divmod(p, g)[0])


def poly_at_matrix(p, m):
    n = len(m)
    out = la.zeros(n, n)
    for c in reversed(_trim(p)):
        out = la.matmul(out, m)
        for i in range(n):
            out[i][i] += c
    return out


def charpoly(m) -> list[Fraction]:
    """det(xI - M) by Faddeev-LeVerrier, lowest degree first."""
    n = len(m)
    m = la.to_fraction_matrix(m)
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    mk = la.zeros(n, n)
    for k in range(1, n + 1):
        mk = la.matmul(m, mk)
        for i in range(n):
            mk[i][i] += c[n - k + 1]
        c[n - k] = -la.trace(la.matmul(m, mk)) / k
    return c


def minimal_polynomial(m) -> list[Fraction]:
    """Monic minimal polynomial via the first dependency among powers of M."""
    n = len(m)
    powers = [la.identity(n)]
    flat = [[x for row in powers[0] for x in row]]
    while True:
        nxt = la.matmul(powers[-1], m)
        v = [x for row in nxt for x in row]
        # columns of the system are the flattened powers
        cols = flat + [v]
        sol = la.solve(la.transpose(flat), v)
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        powers.append(nxt)
        flat = cols


def _to_sympy(p):
    x = sp.Symbol("x")
    return sp.Poly([sp.Rational(c.numerator, c.denominator) for c in reversed(p)], x, domain="QQ")


def gaussian_roots(p) -> list[GaussianRational] | None:
    """Distinct roots of p if they all lie in Q(i), else None."""
    p = _trim(p)
    if len(p) <= 1:
        return []
    _, factors = sp.factor_list(_to_sympy(p), gaussian=True)
    roots = []
    for f, _mult in factors:
        if f.degree() != 1:
            return None
        a, b = f.all_coeffs()
        # coefficients are exact Gaussian rationals; nsimplify would guess radicals
        re, im = sp.expand(-b / a).as_real_imag()
        re, im = sp.Rational(re), sp.Rational(im)
        roots.append(GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q))))
    return roots


def pure_imaginary_spectrum(m) -> bool:
    """All eigenvalues of M have zero real part (exact test).

    Equivalent to every eigenvalue of M^2 being real and <= 0.
    """
    m = la.to_fraction_matrix(m)
    r = squarefree_part(charpoly(la.matmul(m, m)))
    if len(r) <= 1:
        return True
    poly = _to_sympy(r)
    return poly.count_roots(-sp.oo, 0) == poly.degree()


# -- Jordan-Chevalley ---------------------------------------------------------

@dataclass(frozen=True)
class JordanPair:
    S: list
    N: list

    def check(self, m) -> bool:
        n = len(m)
        ok_sum = la.matadd(self.S, self.N) == la.to_fraction_matrix(m)
        ok_comm = la.is_zero_matrix(la.commutator(self.S, self.N))
        ok_nil = la.is_zero_matrix(la.matpow(self.N, n)) if n else True
        mp = minimal_polynomial(self.S) if n else [Fraction(1)]
        ok_sqf = len(poly_gcd(mp, poly_deriv(mp))) <= 1
        return ok_sum and ok_comm and ok_nil and ok_sqf


def jordan_chevalley(m) -> JordanPair:
    """Exact commuting semisimple + nilpotent splitting of a rational matrix.

    Newton iteration S <- S - q(S) q'(S)^{-1} on the squarefree part q of
    the characteristic polynomial; converges in O(log n) steps.
    """
    m = la.to_fraction_matrix(m)
    n = len(m)
    if n == 0:
        return JordanPair([], [])
    q = squarefree_part(charpoly(m))
    dq = poly_deriv(q)
    s = m
    for _ in range(2 * n + 2):
        qs = poly_at_matrix(q, s)
        if la.is_zero_matrix(qs):
            break
        s = la.matsub(s, la.matmul(qs, la.inverse(poly_at_matrix(dq, s))))
    else:  # pragma: no cover - the iteration provably terminates
        raise RuntimeError("Jordan-Chevalley iteration did not converge")
    return JordanPair(s, la.matsub(m, s))


# -- characters ------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """Values alpha(X_j) on a basis of the acting algebra."""

    values: tuple
    exact: bool = True

    def conj(self) -> "Character":
        if self.exact:
            return Character(tuple(v.conjugate() for v in self.values), True)
        return Character(tuple(complex(v).conjugate() for v in self.values), False)

    def __add__(self, other: "Character") -> "Character":
        exact = self.exact and other.exact
        if exact:
            return Character(tuple(a + b for a, b in zip(self.values, other.values)), True)
        return Character(tuple(complex(a) + complex(b) for a, b in zip(self.values, other.values)), False)

    def scale(self, k) -> "Character":
        if self.exact:
            return Character(tuple(v * k for v in self.values), True)
        return Character(tuple(complex(v) * k for v in self.values), False)

    def real_part(self) -> tuple:
        return tuple(v.re if self.exact else complex(v).real for v in self.values)

    def imag_part(self) -> tuple:
        return tuple(v.im if self.exact else complex(v).imag for v in self.values)

    def has_nonzero_real_part(self, tol: float = DEFAULT_TOL) -> bool:
        if self.exact:
            return any(self.real_part())
        return any(abs(x) > tol for x in self.real_part())

    def is_zero(self, tol: float = DEFAULT_TOL) -> bool:
        if self.exact:
            return not any(self.values)
        return all(abs(complex(v)) <= tol for v in self.values)

    def close_to(self, other: "Character", tol: float = DEFAULT_TOL) -> bool:
        if self.exact and other.exact:
            return self.values == other.values
        scale = 1 + max((abs(complex(v)) for v in self.values), default=0)
        return all(abs(complex(a) - complex(b)) <= tol * scale for a, b in zip(self.values, other.values))

    def as_complex(self) -> tuple:
        return tuple(complex(v) for v in self.values)

    def __str__(self):
        parts = [str(v) for v in self.values]
        if len(parts) == 1 and parts[0].startswith("("):
            return parts[0]
        return "(" + ", ".join(parts) + ")"


@dataclass
class WeightSpace:
    character: Character
    basis: list            # vectors in coordinates of V (Q(i) or complex)
    flag: list | None      # triangularizing basis, common eigenvectors first
    common: list | None    # common eigenvectors of the full action

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class WeightDecomposition:
    actions: list                 # rational matrices rho(X_j) on V
    spaces: list                  # list of WeightSpace
    embedding: list | None = None  # basis of V inside an ambient space
    exact: bool = True
    tol: float = DEFAULT_TOL
    semisimple: list = field(default_factory=list)
    nilpotent: list = field(default_factory=list)

    @property
    def characters(self) -> list[Character]:
        return [w.character for w in self.spaces]

    @property
    def dim(self) -> int:
        return len(self.actions[0]) if self.actions else (len(self.embedding) if self.embedding else 0)

    def find(self, alpha: Character) -> WeightSpace | None:
        for w in self.spaces:
            if w.character.close_to(alpha, self.tol):
                return w
        return None

    def to_ambient(self, v: Sequence) -> tuple:
        if self.embedding is None:
            return tuple(v)
        n = len(self.embedding[0])
        out = [Fraction(0) if self.exact else 0j] * n
        for c, b in zip(v, self.embedding):
            if c:
                for i, x in enumerate(b):
                    if x:
                        out[i] = out[i] + c * x
        return tuple(out)

    def ambient_basis(self, w: WeightSpace) -> list[tuple]:
        return [self.to_ambient(v) for v in w.basis]


def _is_nilpotent_matrix_algebra(mats: list) -> bool:
    n = len(mats[0]) if mats else 0
    flat = lambda m: [x for row in m for x in row]
    span = la.echelon_basis([flat(m) for m in mats], n * n)
    if not span:
        return True
    unflat = lambda v: [list(v[i * n:(i + 1) * n]) for i in range(n)]
    base = [unflat(v) for v in span]
    # closure under brackets
    for a, b in itertools.combinations(base, 2):
        if not la.in_span(span, flat(la.commutator(a, b))):
            raise ValueError("action matrices do not span a Lie algebra")
    cur = base
    for _ in range(len(base) + 1):
        nxt = la.echelon_basis([flat(la.commutator(a, c)) for a in base for c in cur], n * n)
        if not nxt:
            return True
        if len(nxt) == len(cur):
            return False
        cur = [unflat(v) for v in nxt]
    return False


def is_nilpotent_image(mats: Sequence) -> bool:
    mats = [la.to_fraction_matrix(m) for m in mats]
    return _is_nilpotent_matrix_algebra(mats)


def _gauss_matrix(m):
    return [[to_gaussian(x) for x in row] for row in m]


def _exact_common_eigen(actions, semis, roots_per, generic):
    """Try to split V into common eigenspaces exactly; None on failure."""
    n = len(generic)
    spaces = []
    total = 0
    for mu in roots_per:
        shifted = [[generic[i][j] - (mu if i == j else 0) for j in range(n)] for i in range(n)]
        basis = la.nullspace(_gauss_matrix(shifted), n)
        basis = [tuple(to_gaussian(x) for x in v) for v in basis]
        if not basis:
            return None
        v0 = basis[0]
        piv = next(i for i, x in enumerate(v0) if x)
        vals = []
        for s in semis:
            sv = la.matvec(_gauss_matrix(s), v0)
            a = sv[piv] / v0[piv]
            vals.append(to_gaussian(a))
            for v in basis:
                sv = la.matvec(_gauss_matrix(s), v)
                if any(x - a * y for x, y in zip(sv, v)):
                    return None
        spaces.append((Character(tuple(vals), True), basis))
        total += len(basis)
    if total != n:
        return None
    return spaces


def _flag(actions, character: Character, basis: list):
    """Filtration K1 < K2 < ... with N_j K_r in K_{r-1}; returns (flag, K1)."""
    d = len(basis)
    zero = GaussianRational(0)
    # restriction of rho_j - alpha_j to the weight space, in weight-space coordinates
    bt = la.transpose([list(v) for v in basis])
    restricted = []
    for m, a in zip(actions, character.values):
        gm = _gauss_matrix(m)
        cols = []
        for v in basis:
            img = la.matvec(gm, v)
            img = tuple(x - a * y for x, y in zip(img, v))
            c = la.solve(bt, img)
            if c is None:
                raise NotNilpotentImage("weight space is not invariant under the action")
            cols.append(c)
        restricted.append(la.transpose(cols))
    ordered: list[tuple] = []
    current: list[tuple] = []
    while len(current) < d:
        # {x : N_j x in span(current) for all j}
        # one block of span coefficients per action
        k = len(current)
        width = d + k * len(restricted)
        rows = []
        for b, nj in enumerate(restricted):
            for i in range(d):
                row = list(nj[i]) + [zero] * (k * len(restricted))
                for t in range(k):
                    row[d + b * k + t] = -current[t][i]
                rows.append(row)
        sol = la.nullspace(rows, width) if rows else [
            tuple(GaussianRational(1) if i == j else zero for i in range(d)) for j in range(d)]
        layer = [tuple(to_gaussian(x) for x in s[:d]) for s in sol]
        new = []
        for v in layer:
            if not any(v):
                continue
            if not la.in_span(current + new, v):
                new.append(v)
        if not new:
            raise NotNilpotentImage("nilpotent parts do not act nilpotently")
        current = current + new
        ordered.append(new)
    def lift(c):
        out = [zero] * len(basis[0])
        for x, v in zip(c, basis):
            if x:
                out = [o + x * y for o, y in zip(out, v)]
        return tuple(out)
    flag = [lift(c) for layer in ordered for c in layer]
    common = [lift(c) for c in ordered[0]] if ordered else []
    return flag, common


def _float_decomposition(actions, semis, tol, rng):
    n = len(actions[0])
    t = [rng.uniform(0.5, 1.5) for _ in semis]
    generic = sum(ti * np.array([[float(x) for x in row] for row in s]) for ti, s in zip(t, semis))
    vals, vecs = np.linalg.eig(generic)
    fs = [np.array([[float(x) for x in row] for row in s]) for s in semis]
    scale = 1 + max(abs(vals)) if n else 1
    groups: list[list[int]] = []
    for i, v in enumerate(vals):
        for g in groups:
            if abs(vals[g[0]] - v) <= max(tol, 1e-7) * scale:
                g.append(i)
                break
        else:
            groups.append([i])
    out = []
    for g in groups:
        block = vecs[:, g]
        q, _ = np.linalg.qr(block)
        v0 = q[:, 0]
        chars = tuple(complex(np.vdot(v0, s @ v0)) for s in fs)
        for s, a in zip(fs, chars):
            if np.linalg.norm(s @ q - a * q) > 1e-6 * (1 + np.linalg.norm(s)):
                raise NotNilpotentImage("semisimple parts have no common eigenspaces")
        out.append(WeightSpace(Character(chars, False), [tuple(q[:, k]) for k in range(q.shape[1])], None, None))
    return out


def weight_decomposition(actions: Sequence, embedding: Sequence | None = None,
                         tol: float = DEFAULT_TOL, seed: int = 0,
                         exact: bool | None = None) -> WeightDecomposition:
    """Simultaneous eigenspace decomposition of the semisimple parts.

    ``actions`` are rational matrices rho(X_j) on V for a basis X_j of the
    acting (nilpotent-image) algebra.  ``embedding`` optionally lists the
    ambient coordinates of the basis of V.
    """
    actions = [la.to_fraction_matrix(m) for m in actions]
    if not actions:
        raise ValueError("need at least one action matrix")
    n = len(actions[0])
    if not is_nilpotent_image(actions):
        raise NotNilpotentImage("the image of the action is not a nilpotent Lie algebra")
    pairs = [jordan_chevalley(m) for m in actions]
    semis = [p.S for p in pairs]
    for a in semis:
        for m in actions:
            if not la.is_zero_matrix(la.commutator(a, m)):
                raise NotNilpotentImage("semisimple parts do not commute with the action")
    rng = random.Random(seed)
    emb = [tuple(v) for v in embedding] if embedding is not None else None
    if exact is not False:
        for _ in range(8):
            t = [rng.randint(1, 97) for _ in semis]
            generic = la.zeros(n, n)
            for ti, s in zip(t, semis):
                generic = la.matadd(generic, la.matscale(s, Fraction(ti)))
            roots = gaussian_roots(charpoly(generic))
            if roots is None:
                break
            found = _exact_common_eigen(actions, semis, roots, generic)
            if found is None:
                continue
            spaces = []
            for ch, basis in found:
                flag, common = _flag(actions, ch, basis)
                spaces.append(WeightSpace(ch, basis, flag, common))
            spaces.sort(key=lambda w: _char_key(w.character))
            return WeightDecomposition(actions, spaces, emb, True, tol, semis, [p.N for p in pairs])
        if exact:
            raise ValueError("characteristic polynomial does not split over Q(i)")
    spaces = _float_decomposition(actions, semis, tol, rng)
    spaces.sort(key=lambda w: _char_key(w.character))
    return WeightDecomposition(actions, spaces, emb, False, tol, semis, [p.N for p in pairs])


def _char_key(ch: Character):
    return tuple(float(x) for x in ch.real_part()) + tuple(float(x) for x in ch.imag_part())


# -- type (I) --------------------------------------------------------------------

def is_type_I_rep(actions: Sequence) -> bool:
    """Every rho(X) has purely imaginary spectrum.

    For a solvable acting algebra it suffices to test a spanning set (the
    eigenvalues are linear functionals by Lie's theorem).
    """
    return all(pure_imaginary_spectrum(m) for m in actions)


def is_type_I(g: LieAlgebra) -> bool:
    return is_type_I_rep(g.ad_basis)


# -- complements and adjoint weights ----------------------------------------------

def is_nilpotent_complement(g: LieAlgebra, c: Subspace, n: Subspace | None = None) -> bool:
    n = n if n is not None else g.nilradical
    return c.is_subalgebra() and c.is_nilpotent_subalgebra() and (c + n).dim == g.dim


def cartan_complement(g: LieAlgebra, seed: int = 0, attempts: int = 16) -> Subspace:
    """A Cartan subalgebra: generalized null space of ad_Y for generic Y.

    Cartan subalgebras of solvable algebras are nilpotent and supplement the
    nilradical, so they are nilpotent complements.
    """
    rng = random.Random(seed)
    n = g.nilradical
    for _ in range(attempts):
        y = tuple(Fraction(rng.randint(-9, 9)) for _ in range(g.dim))
        if not any(y):
            continue
        a = la.matpow(g.ad(y), g.dim)
        c = g.span(la.nullspace(a, g.dim))
        if is_nilpotent_complement(g, c, n):
            return c
    raise LieError("no nilpotent complement found from generic elements")


def coordinate_complement(g: LieAlgebra, max_dim: int = 6) -> Subspace:
    """Smallest nilpotent complement spanned by basis vectors (dim <= 6)."""
    if g.dim > max_dim:
        raise ValueError(f"exhaustive search limited to dimension {max_dim}")
    n = g.nilradical
    for k in range(g.dim + 1):
        for idx in itertools.combinations(range(g.dim), k):
            c = g.span([g.e(i) for i in idx])
            if is_nilpotent_complement(g, c, n):
                return c
    raise LieError("no coordinate nilpotent complement")


def adjoint_weights(g: LieAlgebra, complement: Subspace | None = None,
                    on: Subspace | None = None, tol: float = DEFAULT_TOL,
                    seed: int = 0, exact: bool | None = None) -> WeightDecomposition:
    """Weights of ad(c) acting on a c-invariant subspace (default: all of g)."""
    c = complement if complement is not None else cartan_complement(g, seed)
    space = on if on is not None else g.whole()
    acts = [g.ad_restricted(x, space) for x in c.basis]
    if not acts:
        acts = [la.zeros(space.dim, space.dim)]
    return weight_decomposition(acts, embedding=space.basis, tol=tol, seed=seed, exact=exact)


def dual_action(actions: Sequence) -> list:
    """The contragredient action -rho^T."""
    return [la.matscale(la.transpose(la.to_fraction_matrix(m)), Fraction(-1)) for m in actions]


# -- obstruction character ---------------------------------------------------------

def _bracket_vanishes(bracket, us, vs, exact: bool, tol: float) -> bool:
    for u in us:
        for v in vs:
            b = bracket(u, v)
            if exact:
                if any(b):
                    return False
            elif any(abs(complex(x)) > tol for x in b):
                return False
    return True


def _norm2(vals) -> float:
    return float(sum(x * x for x in vals))


def check_obstruction(decomp: WeightDecomposition, bracket: Callable, alpha: Character) -> bool:
    """The three conditions: Re alpha != 0, V_alpha != 0, [V_alpha, V_conj] = 0."""
    tol = decomp.tol
    if not alpha.has_nonzero_real_part(tol):
        return False
    w = decomp.find(alpha)
    wb = decomp.find(alpha.conj())
    if w is None or not w.basis:
        return False
    if wb is None:
        return False
    return _bracket_vanishes(bracket, decomp.ambient_basis(w), decomp.ambient_basis(wb),
                             decomp.exact, tol * 1e3)


def find_obstruction_character(decomp: WeightDecomposition, bracket: Callable,
                               start: Character | None = None,
                               return_path: bool = False):
    """Character with Re != 0, nonzero weight space and [V_a, V_conj(a)] = 0.

    Starts from the character with lexicographically largest (|Re|, |Im|)
    (or ``start``) and follows a -> a + conj(a) until the bracket vanishes.
    """
    tol = decomp.tol
    candidates = [w.character for w in decomp.spaces
                  if w.basis and w.character.has_nonzero_real_part(tol)]
    if not candidates:
        raise TypeIInput("every character has zero real part")
    if start is None:
        alpha = max(candidates, key=lambda ch: (_norm2(ch.real_part()), _norm2(ch.imag_part()),
                                                _char_key(ch)))
    else:
        if decomp.find(start) is None or not start.has_nonzero_real_part(tol):
            raise ValueError("start is not a character with nonzero real part")
        alpha = decomp.find(start).character
    path = [alpha]
    for _ in range(decomp.dim + 2):
        w = decomp.find(alpha)
        wb = decomp.find(alpha.conj())
        if _bracket_vanishes(bracket, decomp.ambient_basis(w), decomp.ambient_basis(wb),
                             decomp.exact, tol * 1e3):
            return (alpha, path) if return_path else alpha
        nxt = alpha + alpha.conj()
        found = decomp.find(nxt)
        if found is None or not found.basis:
            raise LieError("bracket of weight spaces escapes the decomposition; "
                           "the action is not by derivations")
        alpha = found.character
        path.append(alpha)
    raise LieError("obstruction iteration did not terminate")


def adjoint_bracket(g: LieAlgebra) -> Callable:
    return lambda u, v: g.bracket(u, v)


__all__ = [
    "DEFAULT_TOL", "NotNilpotentImage", "TypeIInput", "JordanPair", "Character",
    "WeightSpace", "WeightDecomposition", "charpoly", "minimal_polynomial",
    "squarefree_part", "gaussian_roots", "pure_imaginary_spectrum", "jordan_chevalley",
    "weight_decomposition", "is_nilpotent_image", "is_type_I", "is_type_I_rep",
    "is_nilpotent_complement", "cartan_complement", "coordinate_complement",
    "adjoint_weights", "dual_action", "check_obstruction", "find_obstruction_character",
    "adjoint_bracket",
]
