"""A totally ordered metabelian group where conjugation outruns every power.

The group is Z[1/2] x Z with (r, n)(s, m) = (r + 2^n s, n + m), ordered
lexicographically with the integer part dominating.  At a = (-1, 0) and
b = (0, -2) the conjugate b^-1 a b = a^4 escapes below every bounded power
of a, which kills both the weakly-abelian law and (in a truncated product)
the Hamiltonian property.
Run as: python demos/dyadic_counterexample.py
"""

from fractions import Fraction

import reslat as R

a = R.DyadicPair(Fraction(-1), 0)
b = R.DyadicPair(Fraction(0), -2)

print("ab   =", R.dyadic_mul(a, b))
print("ba^2 =", R.dyadic_mul(b, R.dyadic_pow(a, 2)))
print("so ab < ba^2:", R.dyadic_cmp(R.dyadic_mul(a, b),
                                    R.dyadic_mul(b, R.dyadic_pow(a, 2))) < 0)

conj = R.dyadic_conjugate(a, b)
print("\nb^-1 a b =", conj, "= a^4")

# Conjugating by b^n produces a^(4^n), below a^n for every n >= 1.
for n in (1, 2, 3, 4):
    c = R.dyadic_conjugate(a, R.dyadic_pow(b, n))
    print(f"b^-{n} a b^{n} = {c}   vs   a^{n} = {R.dyadic_pow(a, n)}")

# Packaged as a truncated-product witness: for each n a coordinate where the
# conjugate fails to dominate the n-th power.
report = R.hamvty_witness(6)
print("\ntruncated product up to coordinate", report.truncation)
for row in report.rows:
    if row.coordinate is not None:
        print(f"  n={row.n}: coordinate {row.coordinate} separates")
print("every exponent certified:", report.all_certified())
