"""Fractions over the positive monoid and the map that projects back onto it.

Every group element is den^-1 * num with both parts positive; the chain
order on the monoid extends to all fractions, and sigma(a^-1 b) = a \\ b is
a conucleus whose image is exactly the monoid.
Run as: python demos/fractions_and_conucleus.py
"""

import random

import reslat as R

x = R.HeisTriple(1, 0, 0)
y = R.HeisTriple(0, 1, 0)
e = R.HEIS_UNIT

# Two spellings of the same fraction.
f = R.OreFraction(x, R.heis_mul(x, y))   # x^-1 (xy)
g = R.OreFraction(e, y)                  # e^-1 y
print(f, "=", g, "?", f == g)

# The extended order can be computed two independent ways: directly on group
# values, or from the witness-pair definition.  They agree.
print("group route:  ", R.frac_cmp_group(f, g))
print("witness route:", R.frac_cmp_witness(f, g))

# The conucleus: greatest monoid element below the fraction.
print("\nsigma(x^-1)      =", R.conucleus_sigma(R.OreFraction(x, e)).triple())
print("sigma(x^-1 (xy)) =", R.conucleus_sigma(f).triple())

# Its defining laws hold on randomized batteries of fractions.
report = R.verify_conucleus(samples=500, box=7, seed=1)
print("\nconucleus law battery over", report.samples, "random fractions:",
      "all hold" if report.ok else report.violations)

# Canonical factorization of an arbitrary group element.
rng = random.Random(0)
for _ in range(3):
    gelt = R.HeisTriple(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
    frac = R.OreFraction.from_group(gelt)
    print(f"{gelt.triple()} = {frac}")
