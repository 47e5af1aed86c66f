"""Oeljeklaus-Toma algebras: no taming form, and SKT only in the smallest case.

Run:  python3 demos/ot_obstruction.py
"""
from tamesolv import catalog, cxstruct as cx, decide
from tamesolv.exterior import Form

# The algebra of an OT manifold of type (s, t) has basis A_i, B_i, G_k.
# theta = sum alpha_i is the Lee form of the standard metric.
for s, t in [(1, 1), (2, 1), (3, 1), (2, 2)]:
    e = catalog.build_OT(s, t)
    g, J = e.g, e.J
    print(f"OT({s},{t})  dim {g.dim}  nilradical dim {g.nilradical.dim}")

    v = decide.decide_taming(g, J, complement=e.complement)
    print("  taming:", v.kind, "|", v.reason)
    if v.direction is not None:
        print("    direction", [str(x) for x in v.direction],
              "kills all", len(decide.closed_two_forms(g)), "closed 2-forms on (X, JX)")

    if t == 1:
        v = decide.decide_skt(g, J, complement=e.complement)
        print("  skt:   ", v.kind)
        if v.kind == "Exists":
            print("    witness", v.witness, "minors", [str(m) for m in v.minors])

# The twisted identity behind the SKT statement, checked exactly for s = 2.
e = catalog.build_OT(2, 1)
g, J, n = e.g, e.J, e.g.dim
theta = e.forms["theta"]
jt = cx.J_form(J, theta)
lhs = g.d(jt) - (jt ^ theta)
print("\ndJtheta - Jtheta^theta =", lhs)
gamma = lambda i: Form(n, 1, {1 << i: 1}).complexify()
w = gamma(4) + gamma(5) * cx.I
ww = w ^ w.conj()
print("ddc(w ^ wbar) == (dJtheta - Jtheta^theta) ^ w ^ wbar:",
      cx.ddc(g, J, ww) == lhs.complexify() ^ ww)
