"""
Iterating the Auslander-Reiten translate
========================================

For k A_11 / rad^5 the orbit of P_1 returns to P_1 shifted by one after
fifteen steps.  A derived equivalent algebra shows the same periodicity with
far messier complexes in between.
"""
from nakayama.algebra import parse_algebra
from nakayama.cli import tau_table
from nakayama.obstructions import tau_orbit_test

for spec in ("radpow=11,5", "n=11;rels=1-5,2-8,5-11"):
    algebra = parse_algebra(spec)
    print(algebra.pretty())
    print("\n".join(tau_table(algebra, 1, 20)))
    print()

# the same fact as a certificate, found by the orbit search
print(tau_orbit_test(parse_algebra("radpow=11,5"), starts=[1], max_steps=20))
