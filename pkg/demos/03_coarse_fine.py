"""
Coarse and fine complexes
=========================

The coarse/fine construction reads two strands of projectives off the
relations.  When the fine strand is at least two longer and the strands
intertwine, the merged complex gives a path from P_1[1] to P_1.
"""
from nakayama.algebra import parse_algebra, rad_power_algebra
from nakayama.complexes import render, stalk
from nakayama.derived import hom_dim, two_strand_complex
from nakayama.obstructions import coarse_fine_radical_lengths, coarse_fine_sequences

algebra = parse_algebra("n=10;rels=1-4,2-5,4-7,5-8,7-10")
res = coarse_fine_sequences(algebra)
print("c =", res.c, " f =", res.f, " fires:", res.fires)

# check the path with the engine: P_1 -> X -> P_1 one degree up
x = two_strand_complex(algebra, res.c + (1,), res.f[:res.l_c + 2], lo=0)
print("X:", render(x))
print("dim End(X) =", hom_dim(x, x))
print("Hom(P_1[1], X) =", hom_dim(stalk(algebra, 1, -1), x), " Hom(X, P_1) =", hom_dim(x, stalk(algebra, 1, 0)))

# radical powers: the lengths follow closed formulas
print("\n n  m  l_c l_f  fires")
for n, m in [(10, 4), (11, 5), (14, 3), (16, 3), (18, 5)]:
    r = coarse_fine_sequences(rad_power_algebra(n, m))
    assert (r.l_c, r.l_f) == coarse_fine_radical_lengths(n, m)
    print(f"{n:2} {m:2} {r.l_c:4} {r.l_f:3}  {r.fires}  {r.diagnostic}")
