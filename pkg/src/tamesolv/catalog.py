"""Example Lie algebras with complex structures and their expected verdicts."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import cxstruct as cx
from . import linalg as la
from .exterior import Form
from .liecore import LieAlgebra, LieError, Subspace, is_unimodular


class NotUnimodular(LieError):
    pass


class ZeroParameter(LieError):
    pass


class NotAssociative(LieError):
    pass


class NotCommutative(LieError):
    pass


@dataclass
class Expectation:
    value: object
    source: str


@dataclass
class CatalogEntry:
    id: str
    params: dict
    g: LieAlgebra
    J: list | None
    subspaces: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    forms: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    @property
    def complement(self) -> Subspace | None:
        return self.subspaces.get("complement")

    def validate(self) -> None:
        if self.J is not None:
            cx.ComplexStructure(self.g, self.J)
            if not cx.is_integrable(self.g, self.J):
                raise LieError(f"{self.id}: catalog J is not integrable")
        roles = {"h": "is_ideal", "s": "is_subalgebra", "complement": "is_nilpotent_subalgebra"}
        for name, sub in self.subspaces.items():
            check = roles.get(name)
            if check and not getattr(sub, check)():
                raise LieError(f"{self.id}: declared subspace {name} fails {check}")
        if "complement" in self.subspaces:
            if (self.subspaces["complement"] + self.g.nilradical).dim != self.g.dim:
                raise LieError(f"{self.id}: complement does not supplement the nilradical")


def _fr(x) -> Fraction:
    return Fraction(x)


def _J_from_pairs(n: int, pairs: Sequence[tuple[int, int]]) -> list[list]:
    """J e_a = e_b and J e_b = -e_a for each pair (a, b)."""
    J = la.zeros(n, n)
    for a, b in pairs:
        J[b][a] = Fraction(1)
        J[a][b] = Fraction(-1)
    return J


def _entry(id, params, g, J, subspaces=None, expected=None, forms=None, metadata=None):
    e = CatalogEntry(id, params, g, J, subspaces or {}, expected or {}, forms or {}, metadata or {})
    e.validate()
    return e


# -- builders ----------------------------------------------------------------------

def build_torus(m: int = 1) -> CatalogEntry:
    n = 2 * m
    g = LieAlgebra(n, {})
    J = _J_from_pairs(n, [(2 * i, 2 * i + 1) for i in range(m)])
    return _entry(f"torus({m})", {"m": m}, g, J, {"complement": g.zero_subspace()},
                  {"taming": Expectation("Exists", "flat torus: standard Kaehler form"),
                   "skt": Expectation("Exists", "flat torus"),
                   "unimodular": Expectation(True, "abelian")})


def build_r2() -> CatalogEntry:
    g = LieAlgebra(2, {(0, 1): {1: 1}}, ["A", "B"])
    J = _J_from_pairs(2, [(0, 1)])
    return _entry("r2", {}, g, J, {"complement": g.span([g.e(0)])},
                  {"taming": Expectation("Exists", "derived: A^B is closed and tames J"),
                   "unimodular": Expectation(False, "tr ad_A = 1"),
                   "type_I": Expectation(False, "ad_A has eigenvalue 1")})


def build_heisenberg() -> CatalogEntry:
    g = LieAlgebra(3, {(0, 1): {2: 1}})
    return _entry("heisenberg", {}, g, None, {},
                  {"unimodular": Expectation(True, "nilpotent"), "type_I": Expectation(True, "nilpotent")})


def build_filiform4() -> CatalogEntry:
    g = LieAlgebra(4, {(0, 1): {2: 1}, (0, 2): {3: 1}})
    return _entry("filiform4", {}, g, None, {},
                  {"unimodular": Expectation(True, "nilpotent"), "type_I": Expectation(True, "nilpotent")})


def build_heisenberg_R() -> CatalogEntry:
    """Heisenberg + R with J e1 = e2, J e3 = e4 (Kodaira-Thurston)."""
    g = LieAlgebra(4, {(0, 1): {2: 1}})
    J = _J_from_pairs(4, [(0, 1), (2, 3)])
    return _entry("heisenberg_R", {}, g, J, {"complement": g.zero_subspace()},
                  {"taming": Expectation("NotExists", "nilpotent non-abelian: no taming form"),
                   "skt": Expectation("Exists", "derived: unimodular 4-dim, d vanishes on 3-forms"),
                   "unimodular": Expectation(True, "nilpotent")})


def build_OT(s: int = 1, t: int = 1, b: Sequence[Sequence] | None = None,
             c: Sequence[Sequence] | None = None) -> CatalogEntry:
    """Solvable algebra of an OT manifold of type (s, t).

    Basis A_1..A_s, B_1..B_s, G_1..G_2t; d alpha_i = 0,
    d beta_i = -alpha_i ^ beta_i, and the gamma pairs rotate-scale under
    psi_k = (1/2) sum_i b_ik alpha_i, phi_k = sum_i c_ik alpha_i.
    """
    if s < 1 or t < 1:
        raise ValueError("need s >= 1 and t >= 1")
    if b is None:
        b = [[Fraction(1, t)] * t for _ in range(s)]
    if c is None:
        c = [[Fraction(2 * i + k + 1, 3) for k in range(t)] for i in range(s)]
    b = [[_fr(x) for x in row] for row in b]
    c = [[_fr(x) for x in row] for row in c]
    if len(b) != s or len(c) != s or any(len(r) != t for r in b + c):
        raise ValueError("b and c must be s x t")
    for i, row in enumerate(b):
        if sum(row) != 1:
            raise NotUnimodular(f"trace of ad_A{i + 1} is {1 - sum(row)}; need sum_k b_ik = 1")
    n = 2 * s + 2 * t
    names = [f"A{i + 1}" for i in range(s)] + [f"B{i + 1}" for i in range(s)] + \
            [f"G{k + 1}" for k in range(2 * t)]
    one = lambda i: Form(n, 1, {1 << i: 1})
    diffs = {s + i: -(one(i) ^ one(s + i)) for i in range(s)}
    for k in range(t):
        psi = Form(n, 1, {1 << i: b[i][k] / 2 for i in range(s) if b[i][k]})
        phi = Form(n, 1, {1 << i: c[i][k] for i in range(s) if c[i][k]})
        g1, g2 = 2 * s + 2 * k, 2 * s + 2 * k + 1
        diffs[g1] = (psi ^ one(g1)) + (phi ^ one(g2))
        diffs[g2] = -(phi ^ one(g1)) + (psi ^ one(g2))
    g = LieAlgebra.from_differentials(names, diffs)
    J = _J_from_pairs(n, [(i, s + i) for i in range(s)] +
                      [(2 * s + 2 * k, 2 * s + 2 * k + 1) for k in range(t)])
    split_s = g.span([g.e(i) for i in range(2 * s)])
    split_h = g.span([g.e(i) for i in range(2 * s, n)])
    expected = {
        "taming": Expectation("NotExists", "OT manifolds carry no Hermitian-symplectic structure"),
        "unimodular": Expectation(True, "sum_k b_ik = 1"),
        "type_I": Expectation(False, "ad_A1 has eigenvalue 1"),
        "thm11": Expectation(True, "g = (r2)^s |x C^t with J split"),
    }
    if s == 1 and t == 1:
        expected["skt"] = Expectation("Exists", "4-dim unimodular: every invariant 3-form is closed")
    elif t == 1:
        expected["skt"] = Expectation("NotExists", "OT of type (s,1), s >= 2: no SKT structure")
    meta = {"transcription": ["d beta_i = -alpha_i ^ beta_i (index restored)",
                              "J on r2 is J A = B, J B = -A"]}
    theta = Form.zero(n, 1)
    for i in range(s):
        theta = theta + one(i)
    return _entry(f"OT({s},{t})", {"s": s, "t": t, "b": b, "c": c}, g, J,
                  {"complement": g.span([g.e(i) for i in range(s)]), "s": split_s, "h": split_h},
                  expected, {"theta": theta}, meta)


def build_C_semidirect_C2m(m: int = 1, a: Sequence[int] | None = None) -> CatalogEntry:
    """C |x C^{2m}: x acts by e^{a_i x}, e^{-a_i x} on w_{2i-1}, w_{2i}.

    Basis X, Y, U_1..U_2m, V_1..V_2m with w_j = u_j + i v_j, J X = Y,
    J U_j = V_j.
    """
    if a is None:
        a = list(range(1, m + 1))
    a = [_fr(x) for x in a]
    if len(a) != m:
        raise ValueError("need m parameters")
    if any(x == 0 for x in a):
        raise ZeroParameter("parameters a_i must be nonzero")
    n = 2 + 4 * m
    U = lambda j: 2 + j
    V = lambda j: 2 + 2 * m + j
    br = {}
    for i in range(m):
        for j, sgn in ((2 * i, 1), (2 * i + 1, -1)):
            br[(0, U(j))] = {U(j): sgn * a[i]}
            br[(0, V(j))] = {V(j): sgn * a[i]}
    names = ["X", "Y"] + [f"U{j + 1}" for j in range(2 * m)] + [f"V{j + 1}" for j in range(2 * m)]
    g = LieAlgebra(n, br, names)
    J = _J_from_pairs(n, [(0, 1)] + [(U(j), V(j)) for j in range(2 * m)])
    two = lambda p, q: Form(n, 2, {(1 << p) | (1 << q): 2})
    omega = two(0, 1)
    for i in range(m):
        omega = omega + two(U(2 * i), U(2 * i + 1)) + two(V(2 * i), V(2 * i + 1))
    expected = {
        "taming": Expectation("NotExists", "C |x C^2m: no taming symplectic structure"),
        "skt": Expectation("NotExists", "C |x C^2m: no SKT structure"),
        "unimodular": Expectation(True, "weights a_i and -a_i cancel"),
        "thm11": Expectation(True, "g = C |x C^2m with J split"),
    }
    return _entry(f"C_semidirect_C2m({m})", {"m": m, "a": a}, g, J,
                  {"complement": g.span([g.e(0), g.e(1)]), "s": g.span([g.e(0), g.e(1)]),
                   "h": g.span([g.e(i) for i in range(2, n)])},
                  expected, {"pseudo_kaehler": omega})


YAMADA_NAMES = ["A1", "A2", "W1", "W2"] + [f"{p}{j}" for p in ("X", "Y", "Z") for j in range(1, 5)] + \
               [f"{p}'{j}" for p in ("X", "Y", "Z") for j in range(1, 5)]


def build_yamada(t0=1) -> CatalogEntry:
    t0 = _fr(t0)
    if t0 == 0:
        raise ZeroParameter("t0 must be nonzero")
    names = YAMADA_NAMES
    ix = {nm: i for i, nm in enumerate(names)}
    br: dict = {}

    def put(a, b, c, coef=1):
        br.setdefault((ix[a], ix[b]), {})[ix[c]] = coef

    put("A1", "A2", "W1")
    for pr, act in (("", "A1"), ("'", "A2")):
        X = lambda j: f"X{pr}{j}"
        Y = lambda j: f"Y{pr}{j}"
        Z = lambda j: f"Z{pr}{j}"
        put(X(1), Y(1), Z(1))
        put(X(3), Y(3), Z(3))
        put(X(2), Y(1), Z(2))
        put(X(4), Y(3), Z(4))
        for j, w in ((1, 1), (2, 1), (3, -1), (4, -1)):
            put(act, X(j), X(j), w * t0)
            put(act, Y(j), Y(j), -2 * w * t0)
            put(act, Z(j), Z(j), -w * t0)
    n = len(names)
    g = LieAlgebra(n, br, names)
    pairs = [("A1", "A2"), ("W1", "W2")]
    for pr in ("", "'"):
        for p in ("X", "Y", "Z"):
            pairs.append((f"{p}{pr}1", f"{p}{pr}2"))
            pairs.append((f"{p}{pr}3", f"{p}{pr}4"))
    J = _J_from_pairs(n, [(ix[a], ix[b]) for a, b in pairs])
    s = g.span([g.e(i) for i in range(4)])
    h = g.span([g.e(i) for i in range(4, n)])
    expected = {
        "skt": Expectation("NotExists", "28-dim pseudo-Kaehler example: no SKT structure compatible with J"),
        "thm11": Expectation(True, "splitting span{A_i, W_i} |x span{X, Y, Z, X', Y', Z'}"),
        "unimodular": Expectation(True, "weights of A1, A2 cancel"),
    }
    meta = {"transcription": ["[A1, X3] = -t0 X3 and [A2, X'3] = -t0 X'3 (closing bracket restored)",
                              "J Y'3 = Y'4 (the primed list repeats J Y3 = Y4)"]}
    return _entry("yamada", {"t0": t0}, g, J,
                  {"s": s, "h": h, "complement": g.span([g.e(i) for i in range(4)])},
                  expected, {}, meta)


def build_s_minus1_0() -> CatalogEntry:
    names = ["f1", "f2", "e1", "e2", "e3", "e4"]
    f1, f2, e1, e2, e3, e4 = range(6)
    br = {
        (f1, e1): {e1: 1}, (f2, e2): {e1: 1},
        (f1, e2): {e2: 1}, (f2, e1): {e2: -1},
        (f1, e3): {e3: -1}, (f2, e4): {e3: -1},
        (f1, e4): {e4: -1}, (f2, e3): {e4: 1},
    }
    g = LieAlgebra(6, br, names)
    J = _J_from_pairs(6, [(f1, f2), (e1, e2), (e3, e4)])
    c = g.span([g.e(f1), g.e(f2)])
    expected = {
        "taming": Expectation("NotExists", "s(-1,0) with abelian J: no taming symplectic form"),
        "abelian_J": Expectation(True, "abelian complex structure"),
        "prop51": Expectation(True, "ad_c J = J ad_c on c = <f1, f2>"),
        "unimodular": Expectation(True, "6-dim unimodular with abelian J"),
    }
    return _entry("s_minus1_0", {}, g, J, {"complement": c}, expected)


def build_tau_tau_prime_30() -> CatalogEntry:
    """[e1, e2] = -e3, [e1, e3] = e2 plus a central e4; J e1 = e4, J e2 = e3."""
    g = LieAlgebra(4, {(0, 1): {2: -1}, (0, 2): {1: 1}})
    J = _J_from_pairs(4, [(0, 3), (1, 2)])
    kaehler = Form(4, 2, {0b1001: 1, 0b0110: 1})
    expected = {
        "taming": Expectation("Exists", "4-dim unimodular Hermitian-symplectic algebra is Kaehler"),
        "type_I": Expectation(True, "ad_e1 has eigenvalues 0, 0, i, -i"),
        "unimodular": Expectation(True, "tr ad = 0"),
    }
    meta = {"J": "catalog choice; only the algebra is fixed by the source"}
    return _entry("tau_tau_prime_30", {}, g, J, {"complement": g.span([g.e(0), g.e(3)])},
                  expected, {"kaehler": kaehler}, meta)


def build_aa6(a=1, b=1) -> CatalogEntry:
    """Almost-abelian 6-dim family in the frame X, JX, Y, JY, Z, JZ.

    dx = d(Jx) = 0, d(Jy) = x^(a z + b Jz), dz = -x^y, d(Jz) = -x^Jy and
    dy = -x^Jx + x^(b z - a Jz).  The x^z, x^Jz terms of dy make ad_X
    commute with J on span{Y, JY, Z, JZ}, i.e. make J integrable.
    """
    a, b = _fr(a), _fr(b)
    if a == 0 and b == 0:
        raise ZeroParameter("a = b = 0 makes the algebra nilpotent")
    n = 6
    one = lambda i: Form(n, 1, {1 << i: 1})
    x, jx, y, jy, z, jz = (one(i) for i in range(6))
    diffs = {2: -(x ^ jx) + (x ^ (z * b - jz * a)), 3: x ^ (z * a + jz * b),
             4: -(x ^ y), 5: -(x ^ jy)}
    g = LieAlgebra.from_differentials(["X", "JX", "Y", "JY", "Z", "JZ"], diffs)
    J = _J_from_pairs(6, [(0, 1), (2, 3), (4, 5)])
    expected = {
        "taming": Expectation("NotExists", "6-dim almost-abelian family: Omega(Z, JZ) = 0"),
        "unimodular": Expectation(True, "tr ad_X = 0"),
    }
    meta = {"transcription": ["dy completed by x^(b z - a Jz) so that J is integrable"]}
    return _entry(f"aa6({a},{b})", {"a": a, "b": b}, g, J, {"complement": g.span([g.e(0)])},
                  expected, {}, dict(meta, direction="Z"))


def build_aff(mult: Sequence[Sequence[Sequence]], name: str = "aff") -> CatalogEntry:
    """aff(A) = A + A with [(x, y), (x', y')] = (0, x y' - x' y), J(x, y) = (y, -x).

    ``mult[i][j][k]`` is the e_k coefficient of e_i e_j.
    """
    k = len(mult)
    m = [[[_fr(v) for v in mult[i][j]] for j in range(k)] for i in range(k)]

    def prod(u, v):
        out = [Fraction(0)] * k
        for i in range(k):
            for j in range(k):
                if u[i] and v[j]:
                    for t in range(k):
                        out[t] += u[i] * v[j] * m[i][j][t]
        return out

    basis = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(k):
            if prod(basis[i], basis[j]) != prod(basis[j], basis[i]):
                raise NotCommutative(f"e{i + 1} e{j + 1} != e{j + 1} e{i + 1}")
            for t in range(k):
                if prod(prod(basis[i], basis[j]), basis[t]) != prod(basis[i], prod(basis[j], basis[t])):
                    raise NotAssociative(f"(e{i + 1} e{j + 1}) e{t + 1} != e{i + 1} (e{j + 1} e{t + 1})")
    n = 2 * k
    br = {}
    for i in range(k):
        for j in range(k):
            terms = {k + t: m[i][j][t] for t in range(k) if m[i][j][t]}
            if terms:
                br[(i, k + j)] = terms
    names = [f"P{i + 1}" for i in range(k)] + [f"Q{i + 1}" for i in range(k)]
    g = LieAlgebra(n, br, names)
    # J P_i = -Q_i, J Q_i = P_i
    J = _J_from_pairs(n, [(k + i, i) for i in range(k)])
    expected = {"abelian_J": Expectation(True, "J(x, y) = (y, -x) is abelian on aff(A)")}
    return _entry(name, {"mult": m}, g, J, {}, expected)


def build_aff_R() -> CatalogEntry:
    e = build_aff([[[1]]], "aff_R")
    e.expected["unimodular"] = Expectation(False, "[(1,0),(0,1)] = (0,1)")
    return e


def build_aff_C() -> CatalogEntry:
    # basis 1, i
    mult = [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]]
    e = build_aff(mult, "aff_C")
    e.expected["unimodular"] = Expectation(False, "aff(C) is not unimodular")
    e.expected["taming"] = Expectation("NotExists", "derived: every closed 2-form has traceless Gram matrix")
    return e


def build_aff_RR() -> CatalogEntry:
    mult = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
    e = build_aff(mult, "aff_R+aff_R")
    e.expected["unimodular"] = Expectation(False, "each aff(R) factor has tr ad = 1")
    return e


def build_aff_nil() -> CatalogEntry:
    e = build_aff([[[0]]], "aff_Reps")
    e.expected["unimodular"] = Expectation(True, "eps^2 = 0: aff(A) is abelian")
    e.expected["taming"] = Expectation("Exists", "abelian")
    return e


def build_complex_r2() -> CatalogEntry:
    """The complex Lie algebra [A, B] = B viewed as a real algebra with J = i."""
    A, iA, B, iB = range(4)
    br = {(A, B): {B: 1}, (A, iB): {iB: 1}, (iA, B): {iB: 1}, (iA, iB): {B: -1}}
    g = LieAlgebra(4, br, ["A", "iA", "B", "iB"])
    J = _J_from_pairs(4, [(A, iA), (B, iB)])
    expected = {
        "skt": Expectation("NotExists", "derived: exact degenerate direction"),
        "taming": Expectation("NotExists", "derived: exact degenerate direction"),
        "abelian_J": Expectation(False, "[iA, iB] = -[A, B]"),
    }
    return _entry("complex_r2", {}, g, J, {"complement": g.span([g.e(A), g.e(iA)])}, expected)


def build_heisenberg_R_nonintegrable() -> tuple[LieAlgebra, list]:
    """Heisenberg + R with J e1 = e3, J e2 = e4: not integrable."""
    g = LieAlgebra(4, {(0, 1): {2: 1}})
    return g, _J_from_pairs(4, [(0, 2), (1, 3)])


# -- registry ------------------------------------------------------------------------

@dataclass(frozen=True)
class Spec:
    builder: Callable
    params: dict
    description: str


REGISTRY: dict[str, Spec] = {
    "torus": Spec(build_torus, {"m": 2}, "abelian R^{2m}, standard J"),
    "r2": Spec(build_r2, {}, "[A, B] = B, J A = B"),
    "heisenberg": Spec(build_heisenberg, {}, "3-dim Heisenberg (no J)"),
    "filiform4": Spec(build_filiform4, {}, "4-dim 3-step nilpotent (no J)"),
    "heisenberg_R": Spec(build_heisenberg_R, {}, "Heisenberg + R, J e1 = e2, J e3 = e4"),
    "OT": Spec(build_OT, {"s": 1, "t": 1}, "Oeljeklaus-Toma algebra of type (s, t)"),
    "C_semidirect_C2m": Spec(build_C_semidirect_C2m, {"m": 1}, "C |x C^{2m} with pseudo-Kaehler form"),
    "yamada": Spec(build_yamada, {"t0": 1}, "28-dim example with splitting"),
    "s_minus1_0": Spec(build_s_minus1_0, {}, "s(-1,0) with abelian J"),
    "tau_tau_prime_30": Spec(build_tau_tau_prime_30, {}, "tt'_{3,0} + R, Kaehler"),
    "aa6": Spec(build_aa6, {"a": 1, "b": 1}, "6-dim almost-abelian family"),
    "aff_R": Spec(build_aff_R, {}, "aff(R)"),
    "aff_C": Spec(build_aff_C, {}, "aff(C)"),
    "aff_RR": Spec(build_aff_RR, {}, "aff(R + R)"),
    "aff_Reps": Spec(build_aff_nil, {}, "aff(R eps), eps^2 = 0"),
    "complex_r2": Spec(build_complex_r2, {}, "complex r2 as a real algebra"),
}


def build(name: str, **params) -> CatalogEntry:
    if name not in REGISTRY:
        raise KeyError(f"unknown catalog entry {name!r}")
    spec = REGISTRY[name]
    kw = dict(spec.params)
    kw.update(params)
    return spec.builder(**kw)


AA6_PAIRS = [(1, 1), (2, -1), (Fraction(-1), Fraction(1, 4)), (3, -2), (-2, 0)]


def table_entries() -> list[CatalogEntry]:
    """Every entry of the regression table."""
    out = [build_OT(s, t) for s, t in ((1, 1), (2, 1), (3, 1), (1, 2), (2, 2))]
    out += [build_C_semidirect_C2m(1), build_C_semidirect_C2m(2)]
    out.append(build_yamada())
    out.append(build_s_minus1_0())
    out += [build_aa6(a, b) for a, b in AA6_PAIRS]
    out.append(build_tau_tau_prime_30())
    out += [build_aff_R(), build_aff_C(), build_aff_RR(), build_aff_nil()]
    out += [build_torus(1), build_torus(2), build_r2(), build_heisenberg_R(), build_complex_r2()]
    return out


__all__ = [
    "CatalogEntry", "Expectation", "NotUnimodular", "ZeroParameter", "NotAssociative",
    "NotCommutative", "build_torus", "build_r2", "build_heisenberg", "build_filiform4",
    "build_heisenberg_R", "build_OT", "build_C_semidirect_C2m", "build_yamada",
    "build_s_minus1_0", "build_tau_tau_prime_30", "build_aa6", "build_aff", "build_aff_R",
    "build_aff_C", "build_aff_RR", "build_aff_nil", "build_complex_r2",
    "build_heisenberg_R_nonintegrable", "REGISTRY", "build", "table_entries", "AA6_PAIRS",
]
