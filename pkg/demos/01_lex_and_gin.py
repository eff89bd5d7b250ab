#!/usr/bin/env python3
# Hilbert functions, lex ideals and generic initial ideals on small examples.
from lexcoh import GF32003, MonomialIdeal, PolyIdeal, Polynomial, RingContext, gin, hilbert_numerator, lex_ideal
from lexcoh.hilbert import gotzmann_number, is_critical, lex_ideal_with_certificate

# two lines through the origin of the plane
I = MonomialIdeal.parse("X1*X2", 2)
H = hilbert_numerator(I)
print("R/I    :", H, " H(0..5) =", H.values(range(6)))
print("lex    :", lex_ideal(I))  # (X1^2): the lex segment with the same Hilbert function
print("Gin    :", gin(I))  # a generic product of two linear forms has initial term X1^2
print("critical:", is_critical(I))

# two skew lines in P^3
skew = MonomialIdeal.parse("X1*X3, X1*X4, X2*X3, X2*X4", 4)
L, cert = lex_ideal_with_certificate(skew)
print()
print("skew lines     :", skew)
print("Hilbert poly   :", hilbert_numerator(skew).polynomial, " Gotzmann number", gotzmann_number(hilbert_numerator(skew).polynomial))
print("lex            :", L, f"(built through degree {cert.stop_degree})")
print("Gin            :", gin(skew))

# a polynomial ideal: gin is certified by two independent coordinate changes
ctx = RingContext(3, GF32003)
J = PolyIdeal(ctx, [Polynomial.parse(ctx, s) for s in ("X1^2 - X2*X3", "X1*X2 - X3^2")])
print()
print("J              :", ", ".join(map(str, J.gens)))
print("in(J) degrevlex:", J.initial_ideal())
print("Gin(J)         :", gin(J, seed=1))
print("lex            :", lex_ideal(J.initial_ideal()))
