"""Existence of taming symplectic forms and SKT metrics at the invariant level.

Both questions ask whether a linear space of 2-forms contains an element
whose symmetric form ``S(X,Y) = (Omega(X,JY) + Omega(Y,JX)) / 2`` is
positive definite.  Answers carry exact certificates:

* ``Exists``: a witness form with positive leading principal minors;
* ``NotExists``: a nonzero X with ``Omega_b(X, JX) = 0`` for every basis
  element, so no combination can be positive on X.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import cxstruct as cx
from . import linalg as la
from . import weights as wt
from .exterior import Form, GaussianRational, I, evaluate, monomials
from .liecore import LieAlgebra, LieError, Subspace

DEFAULT_RESTARTS = 64
DEFAULT_ITERATIONS = 500
MAX_DENOMINATOR = 10 ** 4


class SpanFailure(LieError):
    pass


class NotAComplement(LieError):
    pass


class NotAlmostAbelian(LieError):
    pass


class JNotAbelian(LieError):
    pass


# -- form spaces ----------------------------------------------------------------

@dataclass(frozen=True)
class FormSpace:
    dim: int
    degree: int
    basis: tuple
    condition: str  # "closed" or "ddc_closed_11"

    def __len__(self):
        return len(self.basis)

    def combination(self, coeffs: Sequence) -> Form:
        out = Form.zero(self.dim, self.degree)
        for c, f in zip(coeffs, self.basis):
            if c:
                out = out + f * Fraction(c)
        return out


def _kernel_forms(n: int, degree: int, sources: list[Form], images: list[Form]) -> list[Form]:
    """Canonical basis of {sum x_j sources[j] : sum x_j images[j] = 0}."""
    kernel = la.sparse_kernel([dict(img.items()) for img in images])
    vecs = []
    for comb in kernel:
        f = Form.zero(n, degree)
        for j, c in comb.items():
            f = f + sources[j] * c
        if f:
            vecs.append(dict(f.items()))
    order = monomials(n, degree)
    return [Form(n, degree, v) for v in la.sparse_rref(vecs, order)]


def closed_two_forms(g: LieAlgebra) -> FormSpace:
    n = g.dim
    if n < 2:
        return FormSpace(n, min(2, n), (), "closed")
    src = [Form(n, 2, {m: 1}) for m in monomials(n, 2)]
    imgs = [g.d(f) for f in src]
    return FormSpace(n, 2, tuple(_kernel_forms(n, 2, src, imgs)), "closed")


def ddc_closed_11_forms(g: LieAlgebra, J, require_integrable: bool = True) -> FormSpace:
    if require_integrable and not cx.is_integrable(g, J):
        raise cx.NotIntegrableError("SKT forms need an integrable J")
    n = g.dim
    src = cx.real_11_basis(J)
    imgs = [cx.ddc(g, J, f, warn=False) for f in src]
    return FormSpace(n, 2, tuple(_kernel_forms(n, 2, src, imgs)), "ddc_closed_11")


def form_matrix(a: Form) -> list[list]:
    """Antisymmetric matrix W with a(X, Y) = X^T W Y."""
    n = a.dim
    w = la.zeros(n, n)
    for (i, j), c in a.terms():
        w[i][j] = c
        w[j][i] = -c
    return w


def gram_of_form(J, a: Form) -> list[list]:
    """S(X,Y) = (a(X,JY) + a(Y,JX)) / 2 as an exact symmetric matrix."""
    J = cx._matrix(J)
    wj = la.matmul(form_matrix(a), J)
    n = len(J)
    return [[(wj[i][j] + wj[j][i]) / 2 for j in range(n)] for i in range(n)]


def taming_gram(space: FormSpace, J, coeffs: Sequence) -> list[list]:
    return gram_of_form(J, space.combination(coeffs))


def tames(J, a: Form) -> bool:
    return la.is_positive_definite(gram_of_form(J, a))


# -- verdicts ---------------------------------------------------------------------

@dataclass
class Exists:
    witness: Form
    minors: list
    gram: list
    problem: str = "taming"
    notes: dict = field(default_factory=dict)
    kind: str = "Exists"

    def verify(self, space: FormSpace | None = None, J=None) -> bool:
        g = self.gram if J is None else gram_of_form(J, self.witness)
        return all(m > 0 for m in la.leading_minors(g))


@dataclass
class NotExists:
    """Either a direction X with Omega(X, JX) = 0 on the whole space, or
    (direction None) a nonzero PSD rational Y with <S_b, Y> = 0 for every
    Gram matrix S_b; a direction X is the rank-one case Y = X X^T."""
    direction: tuple | None
    evaluations: list
    dual_witness: list | None = None
    problem: str = "taming"
    reason: str = ""
    notes: dict = field(default_factory=dict)
    kind: str = "NotExists"

    def verify(self, space: FormSpace, J) -> bool:
        x = self.direction
        if x is None:
            return check_dual_witness([gram_of_form(J, f) for f in space.basis], self.dual_witness)
        if not any(x):
            return False
        jx = la.matvec(cx._matrix(J), x)
        return all(evaluate(f, x, jx) == 0 for f in space.basis)


def check_dual_witness(grams, y) -> bool:
    """Y != 0, Y >= 0 and <S, Y> = 0 for every S: then no sum c_b S_b is positive definite."""
    if y is None or not any(any(r) for r in y):
        return False
    if any(y[i][j] != y[j][i] for i in range(len(y)) for j in range(i)):
        return False
    return la.is_positive_semidefinite(y) and all(_pair(s, y) == 0 for s in grams)


def _pair(s, y):
    return sum((a * b for rs, ry in zip(s, y) for a, b in zip(rs, ry) if a and b), Fraction(0))


@dataclass
class Unknown:
    diagnostics: dict
    problem: str = "taming"
    notes: dict = field(default_factory=dict)
    kind: str = "Unknown"

    def verify(self, space=None, J=None) -> bool:
        return True


FeasibilityVerdict = Exists | NotExists | Unknown


# -- search -----------------------------------------------------------------------

def _quad(s, x):
    total = Fraction(0)
    n = len(x)
    for i in range(n):
        if x[i]:
            row = s[i]
            acc = Fraction(0)
            for j in range(n):
                if x[j] and row[j]:
                    acc += row[j] * x[j]
            total += x[i] * acc
    return total


def _is_certificate(grams, x) -> bool:
    return any(x) and all(_quad(s, x) == 0 for s in grams)


def _primitive(v) -> tuple:
    """Scale a rational vector to coprime integers (canonical direction)."""
    from math import gcd
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    first = next(x for x in ints if x)
    sgn = 1 if first > 0 else -1
    return tuple(Fraction(sgn * x // g) for x in ints)


def _real_vectors(v) -> list[tuple]:
    out = []
    re = tuple(x.re if isinstance(x, GaussianRational) else Fraction(x) for x in v)
    im = tuple(x.im if isinstance(x, GaussianRational) else Fraction(0) for x in v)
    for w in (re, im):
        if any(w):
            out.append(w)
    return out


def _weight_candidates(g: LieAlgebra, J, complement, seed) -> list[tuple]:
    """Real parts of weight vectors and of their (1,0) and (0,1) projections."""
    try:
        c = complement if complement is not None else wt.cartan_complement(g, seed)
        decomp = wt.adjoint_weights(g, c, seed=seed, exact=True)
    except (LieError, ValueError):
        return []
    Jm = cx._matrix(J)
    gJ = [[GaussianRational(x) for x in row] for row in Jm]
    out = []
    for w in decomp.spaces:
        vecs = list(w.common or []) + list(w.flag or []) + list(w.basis)
        for v in vecs:
            v = decomp.to_ambient(v)
            v = tuple(GaussianRational(x) if not isinstance(x, GaussianRational) else x for x in v)
            jv = la.matvec(gJ, v)
            v10 = tuple(a - I * b for a, b in zip(v, jv))
            v01 = tuple(a + I * b for a, b in zip(v, jv))
            for u in (v, v10, v01):
                out.extend(_real_vectors(u))
    return out


def _common_radical(grams, n) -> list[tuple]:
    rows = [row for s in grams for row in s]
    return la.nullspace(rows, n) if rows else [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]


def _numeric_null_vectors(grams, n, rng: np.random.Generator, starts: int = 24) -> list[tuple]:
    """Local minima of sum_b (x^T S_b x)^2 on the sphere, rationalized."""
    from scipy.optimize import minimize
    fs = np.array([[[float(x) for x in row] for row in s] for s in grams])
    scale = max(1.0, float(np.abs(fs).max()))
    fs = fs / scale

    def fun(x):
        x = x / np.linalg.norm(x)
        q = np.einsum("bij,i,j->b", fs, x, x)
        grad = 4 * np.einsum("b,bij,j->i", q, fs, x)
        grad = grad - (grad @ x) * x
        return float(q @ q), grad

    out = []
    for _ in range(starts):
        x0 = rng.standard_normal(n)
        res = minimize(fun, x0, jac=True, method="BFGS", options={"maxiter": 400, "gtol": 1e-12})
        x = res.x / np.linalg.norm(res.x)
        if res.fun > 1e-10:
            continue
        k = int(np.argmax(np.abs(x)))
        x = x / x[k]
        for den in (1, 2, 3, 4, 6, 12, 60, 1000):
            v = tuple(Fraction(float(t)).limit_denominator(den) for t in x)
            if any(v):
                out.append(v)
    return out


def _find_direction(g, J, grams, complement, seed) -> tuple | None:
    n = len(cx._matrix(J))
    for v in _common_radical(grams, n):
        if any(v):
            return _primitive(v)
    coords = [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
    for v in coords:
        if _is_certificate(grams, v):
            return v
    seen = set()
    for v in _weight_candidates(g, J, complement, seed):
        p = _primitive(v)
        if p in seen:
            continue
        seen.add(p)
        if _is_certificate(grams, p):
            return p
    # pairs of coordinate vectors
    for i, j in itertools.combinations(range(n), 2):
        for s in (1, -1):
            v = tuple(Fraction(int(t == i) + s * int(t == j)) for t in range(n))
            if _is_certificate(grams, v):
                return v
    rng = np.random.default_rng(seed)
    for v in _numeric_null_vectors(grams, n, rng):
        if _is_certificate(grams, v):
            return _primitive(v)
    return None


def _lambda_min_ascent(grams, rng: np.random.Generator, restarts: int, iterations: int):
    """Maximize lambda_min(sum c_b S_b) over the unit-trace slice.

    Returns (best value, best coefficient vector).
    """
    fs = np.array([[[float(x) for x in row] for row in s] for s in grams])
    m, n = fs.shape[0], fs.shape[1]
    tr = np.einsum("bii->b", fs)
    if not np.any(np.abs(tr) > 1e-14):
        return -np.inf, None
    c0 = tr / (tr @ tr)
    # orthonormal basis of {c : tr . c = 0}
    _, _, vh = np.linalg.svd(tr.reshape(1, -1))
    null = vh[1:].T
    best, best_c = -np.inf, None

    def value(c):
        mat = np.einsum("b,bij->ij", c, fs)
        w, v = np.linalg.eigh(mat)
        return w[0], v[:, 0]

    for r in range(restarts):
        z = np.zeros(null.shape[1]) if r == 0 else rng.standard_normal(null.shape[1]) * 2.0 / max(1, m)
        step0 = 1.0 / n
        for k in range(iterations):
            c = c0 + null @ z
            lam, v = value(c)
            if lam > best:
                best, best_c = lam, c.copy()
                if lam > 1e-3 / n:
                    return best, best_c
            gsub = np.einsum("bij,i,j->b", fs, v, v)
            gz = null.T @ gsub
            nrm = np.linalg.norm(gz)
            if nrm < 1e-14:
                break
            z = z + step0 / np.sqrt(k + 1) * gz / nrm
    return best, best_c


def _round_and_verify(space: FormSpace, J, grams, c) -> Exists | None:
    for den in (1, 2, 4, 10, 100, MAX_DENOMINATOR):
        k = max(range(len(c)), key=lambda i: abs(c[i]))
        cc = c / abs(c[k])
        coeffs = [Fraction(float(x)).limit_denominator(den) for x in cc]
        if not any(coeffs):
            continue
        s = la.zeros(len(grams[0]), len(grams[0]))
        for a, gm in zip(coeffs, grams):
            if a:
                s = la.matadd(s, la.matscale(gm, a))
        minors = la.leading_minors(s)
        if all(x > 0 for x in minors):
            return Exists(space.combination(coeffs), minors, s)
    return None


def _dual_witness(grams, rng, iterations: int = 300):
    """Numerical PSD Y, trace 1, minimizing sum_b <S_b, Y>^2."""
    fs = np.array([[[float(x) for x in row] for row in s] for s in grams])
    n = fs.shape[1]
    y = np.eye(n) / n
    for k in range(iterations):
        q = np.einsum("bij,ij->b", fs, y)
        grad = np.einsum("b,bij->ij", q, fs)
        y = y - 0.5 / (k + 1) * grad
        w, v = np.linalg.eigh((y + y.T) / 2)
        w = _project_simplex(w)
        y = (v * w) @ v.T
    residual = float(np.linalg.norm(np.einsum("bij,ij->b", fs, y)))
    return y, residual


def _exact_dual(grams, y_float, dens=(1, 2, 4, 12, 100, 1000)) -> list | None:
    """Rational Y with check_dual_witness, tried at I and at roundings of y_float."""
    n = len(grams[0])
    eye = la.identity(n)
    if check_dual_witness(grams, eye):
        return eye
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    rows = [[s[i][j] * (1 if i == j else 2) for i, j in pairs] for s in grams]
    null = la.nullspace(rows, len(pairs))
    if not null:
        return None
    gram = [[sum(a * b for a, b in zip(u, v)) for v in null] for u in null]
    for den in dens:
        y0 = [Fraction(float(y_float[i][j])).limit_denominator(den) for i, j in pairs]
        rhs = [sum(a * b for a, b in zip(u, y0)) for u in null]
        coef = la.solve(gram, rhs)
        if coef is None:
            continue
        vec = [sum(c * u[k] for c, u in zip(coef, null)) for k in range(len(pairs))]
        y = la.zeros(n, n)
        for (i, j), v in zip(pairs, vec):
            y[i][j] = y[j][i] = v
        if check_dual_witness(grams, y):
            return y
    return None


def _project_simplex(w):
    u = np.sort(w)[::-1]
    css = np.cumsum(u)
    idx = np.arange(1, len(w) + 1)
    rho = np.nonzero(u * idx > (css - 1))[0][-1]
    theta = (css[rho] - 1) / (rho + 1)
    return np.maximum(w - theta, 0)


def _decide(g, J, space: FormSpace, problem: str, seed: int, complement,
            restarts: int, iterations: int, notes: dict,
            tol: float = wt.DEFAULT_TOL) -> Exists | NotExists | Unknown:
    n = g.dim
    if not space.basis:
        x = tuple(Fraction(int(i == 0)) for i in range(n))
        return NotExists(x, [], None, problem, "the form space is zero", notes)
    grams = [gram_of_form(J, f) for f in space.basis]
    rng = np.random.default_rng(seed)
    # cheap exact attempts first: single basis elements and their sum
    for s in grams:
        if la.is_positive_definite(s):
            return Exists(space.basis[grams.index(s)], la.leading_minors(s), s, problem, notes)
    x = _find_direction(g, J, grams, complement, seed)
    jx = la.matvec(cx._matrix(J), x) if x is not None else None
    if x is not None:
        evals = [evaluate(f, x, jx) for f in space.basis]
        xx = [[a * b for b in x] for a in x]
        return NotExists(x, evals, xx, problem, "degenerate direction", notes)
    best, c = _lambda_min_ascent(grams, rng, restarts, iterations)
    if c is not None and best > tol:
        found = _round_and_verify(space, J, grams, c)
        if found is not None:
            found.problem = problem
            found.notes = notes
            return found
    y, residual = _dual_witness(grams, rng)
    exact = _exact_dual(grams, y)
    if exact is not None:
        return NotExists(None, [], exact, problem, "PSD dual witness orthogonal to every Gram matrix",
                         notes)
    return Unknown({"best_lambda_min": float(best), "dual_witness": y.tolist(),
                    "dual_residual": residual, "space_dim": len(space.basis)}, problem, notes)


def decide_taming(g: LieAlgebra, J, seed: int = 0, complement: Subspace | None = None,
                  restarts: int = DEFAULT_RESTARTS, iterations: int = DEFAULT_ITERATIONS,
                  tol: float = wt.DEFAULT_TOL):
    """Is there a closed 2-form Omega with Omega(X, JX) > 0 for X != 0?"""
    J = cx._matrix(J)
    cx._check_square(J)
    notes = {"integrable": cx.is_integrable(g, J)}
    return _decide(g, J, closed_two_forms(g), "taming", seed, complement, restarts, iterations,
                   notes, tol)


def decide_skt(g: LieAlgebra, J, seed: int = 0, complement: Subspace | None = None,
               restarts: int = DEFAULT_RESTARTS, iterations: int = DEFAULT_ITERATIONS,
               tol: float = wt.DEFAULT_TOL):
    """Is there a positive (1,1)-form omega with dd^c omega = 0?"""
    J = cx._matrix(J)
    cx._check_square(J)
    space = ddc_closed_11_forms(g, J)
    return _decide(g, J, space, "skt", seed, complement, restarts, iterations,
                   {"integrable": True}, tol)


# -- hypothesis checkers ----------------------------------------------------------

def _maps_into(J, sub: Subspace) -> bool:
    J = cx._matrix(J)
    return all(la.matvec(J, v) in sub for v in sub.basis)


def check_thm11_hypotheses(g: LieAlgebra, s: Subspace, h: Subspace, J) -> dict:
    """Conditions for the splitting obstruction g = s |x h.

    Keys: h_ideal, s_solvable, direct, image_nilpotent, not_type_I,
    J_preserves_h, J_commutes, taming_obstructed; and the SKT extras
    s_nilpotent, J_preserves_s, skt_obstructed.
    """
    if (s + h).dim != g.dim:
        raise SpanFailure("s + h does not span g")
    J = cx._matrix(J)
    rep = {
        "h_ideal": h.is_ideal(),
        "s_solvable": s.is_solvable_subalgebra(),
        "direct": s.dim + h.dim == g.dim,
    }
    if rep["h_ideal"]:
        phi = [g.ad_restricted(x, h) for x in s.basis] or [la.zeros(h.dim, h.dim)]
        try:
            rep["image_nilpotent"] = wt.is_nilpotent_image(phi)
        except ValueError:
            rep["image_nilpotent"] = False
        rep["not_type_I"] = not wt.is_type_I_rep(phi)
        rep["J_preserves_h"] = _maps_into(J, h)
        if rep["J_preserves_h"]:
            jh = [h.coordinates(la.matvec(J, v)) for v in h.basis]
            jm = la.transpose([list(c) for c in jh])
            rep["J_commutes"] = all(la.matmul(jm, p) == la.matmul(p, jm) for p in phi)
        else:
            rep["J_commutes"] = False
    else:
        rep.update(image_nilpotent=False, not_type_I=False, J_preserves_h=False, J_commutes=False)
    rep["taming_obstructed"] = all(rep[k] for k in (
        "h_ideal", "s_solvable", "direct", "image_nilpotent", "not_type_I", "J_preserves_h", "J_commutes"))
    rep["s_nilpotent"] = s.is_nilpotent_subalgebra()
    rep["J_preserves_s"] = _maps_into(J, s)
    rep["skt_obstructed"] = rep["taming_obstructed"] and rep["s_nilpotent"] and rep["J_preserves_s"]
    return rep


def check_prop51_hypothesis(g: LieAlgebra, c: Subspace, J) -> bool:
    """ad_C J = J ad_C for every C in the nilpotent complement c."""
    if not wt.is_nilpotent_complement(g, c):
        raise NotAComplement("c is not a nilpotent complement of the nilradical")
    return all(cx.commutes_with_J(J, g.ad(x)) for x in c.basis)


def _standard_metric(J) -> list[list]:
    J = cx._matrix(J)
    n = len(J)
    return la.matadd(la.identity(n), la.matmul(la.transpose(J), J))


def _orth_complement(metric, sub: Subspace, n: int) -> list[tuple]:
    rows = [list(la.matvec(metric, v)) for v in sub.basis]
    return la.nullspace(rows, n) if rows else [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]


def almost_abelian_report(g: LieAlgebra, J, omega: Form | None = None) -> dict:
    """Frame data for an almost-abelian algebra with complex structure J."""
    J = cx._matrix(J)
    nil = g.nilradical
    if nil.dim != g.dim - 1 or not nil.is_abelian():
        raise NotAlmostAbelian("the nilradical is not abelian of codimension one")
    if omega is None:
        metric = _standard_metric(J)
    else:
        metric = gram_of_form(J, omega)
        if not la.is_positive_definite(metric):
            raise ValueError("omega does not tame J")
    n = g.dim
    (x,) = _orth_complement(metric, nil, n)
    x = _primitive(x)
    jx = la.matvec(J, x)
    y = g.bracket(x, jx)
    frame = g.span([x, jx])
    h = _orth_complement(metric, frame, n)
    hsub = g.span(h)
    rep = {
        "nilradical_dim": nil.dim,
        "X": x,
        "JX": jx,
        "JX_in_nilradical": jx in nil,
        "X_JX_commute": not any(y),
        "h": [tuple(v) for v in hsub.basis],
        "h_ad_X_invariant": all(g.bracket(x, v) in hsub for v in hsub.basis),
        "Y": y,
    }
    if any(y):
        jy = la.matvec(J, y)
        z = g.bracket(x, y)
        rep["JY"] = jy
        rep["Z"] = z
        rep["JZ"] = la.matvec(J, z)
        rep["JZ_is_X_JY"] = la.matvec(J, z) == g.bracket(x, jy)
        vecs = [x, jx, y, jy, z, la.matvec(J, z)]
        rep["frame_rank"] = la.rank([list(v) for v in vecs])
    return rep


def abelian_obstruction_checks(g: LieAlgebra, J, omega: Form) -> dict:
    """Identities of the bilinear forms B_X(Y,Z) = Omega([X,Y],Z) on g^1 + Jg^1.

    X ranges over a J-invariant complement h of V = g^1 + J g^1 (empty when
    V = g).  Returns the case label and one boolean per identity.
    """
    J = cx._matrix(J)
    if not cx.is_abelian_J(g, J):
        raise JNotAbelian("J is not abelian")
    if g.d(omega):
        raise ValueError("omega is not closed")
    n = g.dim
    g1 = g.derived_algebra
    V = g1 + g.span([la.matvec(J, v) for v in g1.basis])
    case = "A" if V.dim == n else "B"
    metric = _standard_metric(J)
    hs = _orth_complement(metric, V, n) if case == "B" else []
    ev = lambda a, b: evaluate(omega, a, b)
    vb = list(V.basis)
    jv = lambda v: la.matvec(J, v)
    sym_b = sym_bp = twist = zero_q = True
    for x in hs:
        xj = jv(x)
        for yy in vb:
            for zz in vb:
                bxy = ev(g.bracket(x, yy), zz)
                if bxy != ev(g.bracket(x, zz), yy):
                    sym_b = False
                if ev(g.bracket(xj, yy), zz) != ev(g.bracket(xj, zz), yy):
                    sym_bp = False
                if ev(g.bracket(x, jv(yy)), jv(zz)) != -bxy:
                    twist = False
                q = ev(g.bracket(x, yy), g.bracket(xj, zz)) + ev(g.bracket(x, zz), g.bracket(xj, yy))
                if q:
                    zero_q = False
    return {
        "case": case,
        "V_dim": V.dim,
        "V_abelian": V.is_abelian(),
        "h_dim": len(hs),
        "B_symmetric": sym_b,
        "Bprime_symmetric": sym_bp,
        "J_twist_identity": twist,
        "Omega_XY_JXY_zero": zero_q,
        "h_centralizes_V": all(not any(g.bracket(x, v)) for x in hs for v in vb),
    }


__all__ = [
    "FormSpace", "Exists", "NotExists", "check_dual_witness", "Unknown", "FeasibilityVerdict", "SpanFailure",
    "NotAComplement", "NotAlmostAbelian", "JNotAbelian", "closed_two_forms",
    "ddc_closed_11_forms", "form_matrix", "gram_of_form", "taming_gram", "tames",
    "decide_taming", "decide_skt", "check_thm11_hypotheses", "check_prop51_hypothesis",
    "almost_abelian_report", "abelian_obstruction_checks",
]
