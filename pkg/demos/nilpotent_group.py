"""The free class-2 nilpotent group on two generators, in exact arithmetic.

Elements are integer triples (alpha, beta, gamma) standing for the normal
form x^alpha y^beta [y,x]^gamma; the product carries a single cross term.
Run as: python demos/nilpotent_group.py
"""

import reslat as R

x = R.HeisTriple(1, 0, 0)
y = R.HeisTriple(0, 1, 0)

print("xy =", R.heis_mul(x, y).triple())
print("yx =", R.heis_mul(y, x).triple(), " (the generators do not commute)")
print("[x,y] =", R.heis_commutator(x, y).triple(), " (central)")

# Every computation can be cross-checked against 3x3 unitriangular integer
# matrices.
g = R.HeisTriple(3, -2, 7)
h = R.HeisTriple(-1, 4, 0)
assert R.to_matrix(R.heis_mul(g, h)) == R.mat_mul(R.to_matrix(g), R.to_matrix(h))
print("\nmatrix oracle agrees on", g.triple(), "*", h.triple())

# Roots are unique when they exist, and there is a closed form.
p = R.heis_pow(R.HeisTriple(1, 1, 1), 2)
print("\n(1,1,1)^2 =", p.triple())
print("its square root:", R.nth_root(p, 2).triple())
print("(1,0,0) has a square root:", R.nth_root(x, 2))

# The positive cone S2 = {gamma <= alpha*beta, all coordinates >= 0} carries
# a total order in which the unit is the top element.
print("\n(1,2,5) in the positive monoid:", R.s2_member(R.HeisTriple(1, 2, 5)))
print("x vs y in the chain:", "x < y" if R.s2_cmp(x, y) < 0 else "x >= y")

# Residuals in the chain have a closed form, verified elsewhere against a
# brute-force candidate scan.
from reslat.omon import s2_residual

xy = R.heis_mul(x, y)
print("x \\ (xy) =", s2_residual(x, xy, "left").triple())
print("x / y    =", s2_residual(y, x, "right").triple(),
      " (so (x/y)y = xy != x: divisibility fails)")
