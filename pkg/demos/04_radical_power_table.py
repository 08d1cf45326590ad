"""
Radical power algebras that are not piecewise hereditary
========================================================

Five seeds carry tau-periodicity certificates.  Vertex insertions then reach
every algebra k A_n / rad^r of the table; each derivation replays to the
target exactly and re-checks its seed.
"""
from nakayama.algebra import rad_power_algebra
from nakayama.errors import OutOfTable
from nakayama.obstructions import hs_derivation

print("   r:" + "".join(f"{r:3}" for r in range(3, 13)))
for n in range(10, 21):
    row = []
    for r in range(3, 13):
        try:
            d = hs_derivation(n, r)
        except OutOfTable:
            row.append("  .")
            continue
        assert d.verify(rad_power_algebra(n, r))
        row.append("  x")
    print(f"n={n:2}" + "".join(row))

d = hs_derivation(14, 9)
print("\nLambda(14,9) from", d.seed, "via", ", ".join(d.moves))
