#!/usr/bin/env python3
# Checking the rigidity statements on examples, and the two skew lines case.
from lexcoh import MonomialIdeal, is_i_scm
from lexcoh.cohomology import bw_polynomial, rows_equal
from lexcoh.rigidity import Invariants, corollary_4_5_check, scm_profile, theorem_1_4_check, theorem_4_4_check

for text, n in (("X1^2, X1*X2", 2), ("X1*X2", 2)):
    I = MonomialIdeal.parse(text, n)
    r = theorem_1_4_check(I)
    print(f"{I}: conditions {r.conditions} -> consistent={r.consistent}")

skew = MonomialIdeal.parse("X1*X3, X1*X4, X2*X3, X2*X4", 4)
v = Invariants(skew)
print()
print("skew lines:", skew)
print("  Gin:", v.gin, "  lex:", v.lex)
print("  BW(R/I)  =", bw_polynomial(skew))
print("  BW(R/lex)=", bw_polynomial(v.lex))
print("  i-sCM profile:", scm_profile(skew, v))
print("  2-sCM:", is_i_scm(skew, 2))

# row 2 of Gin agrees with row 2 of lex, yet row 2 of R/I does not
for k in range(5):
    print(f"  row {k}: Gin=lex {rows_equal(v.gin_table, v.lex_table, k)!s:5}  I=lex {rows_equal(v.table, v.lex_table, k)}")
print("  h^2 of R/I  :", [v.table.h(2, j) for j in range(-1, -6, -1)])
print("  h^2 of R/Gin:", [v.gin_table.h(2, j) for j in range(-1, -6, -1)])
t44 = theorem_4_4_check(skew, v)
print("  row propagation from Gin to I holds:", t44.ok, t44.failures)
c45 = corollary_4_5_check(skew, 2, v)
print("  six conditions at i=2:", c45.conditions)
