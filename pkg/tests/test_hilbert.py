import itertools
from math import comb

import pytest

from conftest import mono
from lexcoh.hilbert import (
    HilbertSeries,
    LexConstructionError,
    gotzmann_number,
    growth_bound,
    hilbert_function,
    hilbert_numerator,
    hilbert_polynomial,
    is_critical,
    is_universal_lex,
    lex_ideal,
    lex_ideal_from_series,
    macaulay_rep,
    depth_formula_check,
)
from lexcoh.monomial_ideal import MonomialIdeal, is_lex_segment


def count_standard(I: MonomialIdeal, j: int) -> int:
    """Independent oracle: enumerate degree-j exponent vectors outside I."""
    n = I.n
    total = 0
    for u in itertools.product(range(j + 1), repeat=n):
        if sum(u) == j and not any(all(a <= b for a, b in zip(g, u)) for g in I.gens):
            total += 1
    return total


def test_numerator_examples():
    assert hilbert_numerator(mono("X1^2, X1*X2", 2)).numerator == (1, 0, -2, 1)
    assert hilbert_numerator(MonomialIdeal(3)).numerator == (1,)
    assert hilbert_numerator(MonomialIdeal.unit(3)).numerator == ()


def test_hilbert_function_examples():
    assert hilbert_function(mono("X1*X2", 2), range(4)) == [1, 2, 2, 2]
    assert hilbert_function(MonomialIdeal(2), range(3)) == [1, 2, 3]
    assert hilbert_function(MonomialIdeal.unit(2), range(3)) == [0, 0, 0]
    assert hilbert_function(mono("X1^2, X1*X2", 2), range(4)) == [1, 2, 1, 1]


@pytest.mark.parametrize(
    "text,n",
    [("X1*X3, X1*X4, X2*X3, X2*X4", 4), ("X1^3, X2^2*X3, X1*X2*X3", 3), ("X2^4, X1*X3^2, X1^2*X2", 3), ("X1^2*X2, X2^2*X4, X1*X3, X3*X4", 4)],
)
def test_series_against_enumeration(text, n):
    I = mono(text, n)
    H = hilbert_numerator(I)
    assert [H[j] for j in range(8)] == [count_standard(I, j) for j in range(8)]


def test_hilbert_polynomial():
    assert [hilbert_polynomial(mono("X1*X2", 2))(j) for j in range(5)] == [2] * 5
    P = hilbert_polynomial(MonomialIdeal(2))
    assert [P(j) for j in range(5)] == [1, 2, 3, 4, 5]
    assert hilbert_polynomial(mono("X1^2, X2^2", 2)).is_zero()


def test_macaulay_representation():
    assert macaulay_rep(4, 2) == [(3, 2), (1, 1)]
    assert growth_bound(4, 2) == 5
    assert macaulay_rep(0, 3) == [] and growth_bound(0, 3) == 0
    assert macaulay_rep(comb(6, 3), 3) == [(6, 3)]
    assert growth_bound(comb(6, 3), 3) == comb(7, 4)


def _growth_oracle(a: int, d: int, n: int = 3) -> int:
    """Largest H(d+1) over lex segments: count degree d+1 monomials outside
    the ideal generated by the first C(n-1+d, d) - a degree-d monomials."""
    from lexcoh.ring import lex_key, monomials_of_degree

    mons = sorted(monomials_of_degree(n, d), key=lex_key, reverse=True)
    I = MonomialIdeal(n, mons[: len(mons) - a]) if len(mons) > a else MonomialIdeal(n)
    return count_standard(I, d + 1)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_growth_bound_matches_lex_oracle(d):
    top = comb(2 + d, d)
    for a in range(top + 1):
        assert growth_bound(a, d) == _growth_oracle(a, d)


def test_gotzmann_numbers():
    two_points = hilbert_polynomial(mono("X1*X2", 2))
    assert gotzmann_number(two_points) == 2
    line = hilbert_polynomial(MonomialIdeal(2))
    assert gotzmann_number(line) == 1
    assert gotzmann_number(hilbert_polynomial(mono("X1, X2", 2))) == 0


def test_lex_examples():
    assert lex_ideal(mono("X1*X2", 2)) == mono("X1^2", 2)
    I = mono("X1^2, X1*X2", 2)
    assert lex_ideal(I) == I
    assert lex_ideal(MonomialIdeal(3)).is_zero()
    skew = mono("X1*X3, X1*X4, X2*X3, X2*X4", 4)
    assert lex_ideal(skew) == mono("X1^2, X1*X2, X1*X3, X1*X4, X2^3, X2^2*X3", 4)


def test_lex_rejects_impossible_series():
    # H = 1, 3, ... is not a Hilbert function in two variables
    with pytest.raises(LexConstructionError):
        lex_ideal_from_series(HilbertSeries((1, 1, -2), 2))


def test_universal_and_critical():
    assert is_universal_lex(mono("X1, X2^3", 3))
    assert is_critical(mono("X1*X2", 2))
    assert not is_universal_lex(mono("X1^2, X1*X2, X2^2", 2))


def test_depth_formula():
    assert depth_formula_check(mono("X1*X2", 2))
    assert depth_formula_check(mono("X1", 2))
    assert depth_formula_check(MonomialIdeal(3))


def test_lex_is_a_segment_with_the_same_series():
    for text in ("X1*X3, X2^2, X3^3", "X2*X3, X1^2*X3, X3^4", "X1*X2*X3, X2^3"):
        I = mono(text, 3)
        L = lex_ideal(I)
        assert is_lex_segment(L)
        assert hilbert_numerator(L) == hilbert_numerator(I)
