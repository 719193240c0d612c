"""Infinitesimal conformal invariance as exact linear relations.

Invariance of Z_k under the automorphism group, differentiated at the
identity, says that certain integer-weighted sums of the symmetric
coefficients vanish.  No direct combinatorial proof is known for general
k, which makes a large exact sweep genuinely informative: every tuple is
a falsifiable instance.  Everything below runs in rational arithmetic.
"""

from steklov_zeta import (GENERATORS, TrigSeries, apply_generator,
                          bracket_check, generator_relation_check,
                          raising_relation_check, raising_relation_sweep)

probe = TrigSeries.exact({-2: (1, 1), 0: 3, 1: (0, 1), 3: 2})

print("bracket table of the generators (0 = identity holds exactly):")
for g, h in (("C", "D"), ("C", "E"), ("D", "E"),
             ("D0", "Dminus"), ("D0", "Dplus"), ("Dminus", "Dplus")):
    print(f"  [{g:6s}, {h:6s}] deviation: {bracket_check(g, h, probe)}")

print("\ngenerator action on a single mode (degree grows by one):")
e1 = TrigSeries.exact({1: 1})
for g in GENERATORS:
    print(f"  {g:6s}: {apply_generator(g, e1)}")

print("\nthe raising relation on the sum = -1 plane, k = 1, radius 10:")
bad = 0
for idx, value in raising_relation_sweep(1, 10):
    bad += value != 0
print(f"  all {sum(1 for _ in raising_relation_sweep(1, 10))} tuples vanish"
      f" (violations: {bad})")

print("\none k = 3 instance spelled out:")
idx = (2, -1, 1, -2, 0, -1)
print(f"  indices {idx}  ->  {raising_relation_check(idx)}")

print("\nall four generator variants on a random k = 2 plane tuple:")
idx = (3, -4, 2, -2)
for variant in ("D", "E", "Dplus", "Dminus"):
    print(f"  {variant:6s}: {generator_relation_check(idx, variant)}")
