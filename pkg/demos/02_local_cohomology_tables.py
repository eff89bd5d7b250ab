#!/usr/bin/env python3
# Local cohomology tables h^k(R/I)_j and the inequality chain I <= Gin(I) <= lex.
from lexcoh import MonomialIdeal, cohomology_ext, cohomology_layers, gin, lex_ideal
from lexcoh.cohomology import cancellation_witness, default_window, depth_and_dim, tables_leq

I = MonomialIdeal.parse("X1*X2", 2)
print("R/(X1*X2), layers route (closed form per row):")
print(cohomology_layers(I, (-4, 2)).to_text())

print()
print("R/(X1^2, X1*X2): the embedded point shows up in h^0")
print(cohomology_layers(MonomialIdeal.parse("X1^2, X1*X2", 2), (-4, 2)).to_text())

skew = MonomialIdeal.parse("X1*X3, X1*X4, X2*X3, X2*X4", 4)
G, L = gin(skew), lex_ideal(skew)
w = (-5, 2)
T = cohomology_ext(skew, w)  # local duality over a multigraded Taylor complex
TG, TL = cohomology_layers(G, w), cohomology_layers(L, w)
print()
print("skew lines, depth and dim:", depth_and_dim(T))
for name, table in (("R/I", T), ("R/Gin", TG), ("R/lex", TL)):
    print(name)
    print(table.to_text())
print("chain holds:", tables_leq(T, TG) is None and tables_leq(TG, TL) is None)

# the differences lex - I come from consecutive cancellations: d_k = e_k + e_{k+1}
wit = cancellation_witness(T, TL)
print("cancellations per degree:", {j: e for j, e in wit.e.items() if any(e)})
print("default window for the triple:", default_window(skew, G, L))
