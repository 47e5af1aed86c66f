"""Weights of a nilpotent complement and the walk to an obstruction character.

The algebra has [A, X] = X - Y, [A, Y] = X + Y, [X, Y] = W, [A, W] = 2W
and a central U.  ad_A has weights 0, 1 +- i and 2.  Starting at 1 - i
the bracket [V_a, V_abar] = span{W} is nonzero, so the walk moves on to
a + abar = 2, where the condition holds.
"""
from tamesolv import weights
from tamesolv.liecore import LieAlgebra

g = LieAlgebra(5, {(0, 1): {1: 1, 2: -1}, (0, 2): {1: 1, 2: 1}, (1, 2): {3: 1}, (0, 3): {3: 2}},
               ["A", "X", "Y", "W", "U"])
decomp = weights.adjoint_weights(g, g.span([g.e(0)]))
for w in decomp.spaces:
    print(f"weight {w.character}: dim {w.dim}")

bracket = weights.adjoint_bracket(g)
start = next(c for c in decomp.characters if str(c) == "(1-1i)")
alpha, path = weights.find_obstruction_character(decomp, bracket, start=start, return_path=True)
print("walk:", " -> ".join(map(str, path)))
print("obstruction character", alpha, "verified:", weights.check_obstruction(decomp, bracket, alpha))

# Jordan-Chevalley of ad_A, exact over Q
jc = weights.jordan_chevalley(g.ad(g.e(0)))
print("ad_A nilpotent part is zero:", not any(any(r) for r in jc.N))
