"""The 6-dimensional almost-abelian family.

For (a, b) away from the flat line a = 0, b > 0 every closed 2-form
vanishes on (Z, JZ), so nothing tames J.  On the flat line the algebra
is of type (I) and a Kaehler form shows up.
"""
from fractions import Fraction

from tamesolv import catalog, decide, weights
from tamesolv.exterior import evaluate
from tamesolv.linalg import matvec

Z = tuple(Fraction(int(i == 4)) for i in range(6))

for a, b in catalog.AA6_PAIRS + [(0, 4)]:
    e = catalog.build_aa6(a, b)
    g, J = e.g, e.J
    closed = decide.closed_two_forms(g)
    on_z = {evaluate(f, Z, matvec(J, Z)) for f in closed.basis}
    v = decide.decide_taming(g, J, complement=e.complement)
    print(f"aa6({a},{b})  type I: {weights.is_type_I(g)!s:5}  "
          f"Omega(Z,JZ) over {len(closed)} closed forms: {sorted(map(str, on_z))}  -> {v.kind}")
    if v.kind == "Exists":
        print("   Kaehler witness:", v.witness)

rep = decide.almost_abelian_report(catalog.build_aa6(1, 1).g, catalog.build_aa6(1, 1).J)
print("\nframe for aa6(1,1): X =", [str(x) for x in rep["X"]],
      " Y = [X, JX] =", [str(x) for x in rep["Y"]],
      " rank of X, JX, Y, JY, Z, JZ:", rep["frame_rank"])
