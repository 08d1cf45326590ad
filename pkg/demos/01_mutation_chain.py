"""
Derived equivalences by double mutation
=======================================

Two algebras on eleven vertices look nothing alike, yet seven mutations carry
one to the other.  The Coxeter polynomial, a derived invariant, is printed at
every step as a sanity check.
"""
from nakayama import apply_chain, coxeter, parse_algebra, rad_power_algebra

start = parse_algebra("n=11;rels=1-5,2-8,5-11")
print("start   ", start.pretty(), " coxeter:", coxeter(start).polynomial_str())

for rec in apply_chain(start, "L:8,L:9,L:10,L:8,R:2,R:7,R:4"):
    print(f"{rec.move:8}", rec.output.pretty(), " coxeter:", coxeter(rec.output).polynomial_str())

# the chain ends on the radical power algebra
assert rec.output == rad_power_algebra(11, 5)
print("reached k A_11 / rad^5")
