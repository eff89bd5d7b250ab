import pytest

from conftest import SKEW, mono
from lexcoh.cohomology import cohomology_layers, rows_equal
from lexcoh.groebner import gin
from lexcoh.hilbert import lex_ideal
from lexcoh.monomial_ideal import MonomialIdeal
from lexcoh.rigidity import (
    Invariants,
    build_j_pair,
    bw_maximality_check,
    cancellation_pairs,
    corollary_4_3_check,
    corollary_4_5_check,
    corollary_4_5_scan,
    lemma_4_1_check,
    remark_4_6_a_check,
    remark_4_6_b_check,
    scm_profile,
    theorem_1_4_check,
    theorem_4_4_check,
    universality_bridge_check,
)
from oracles import cech_table

# a random monomial instance that behaves like the skew lines
TWIN = "X1^2*X2, X2^2*X4, X1*X3, X3*X4"


def test_lex_saturation_equivalence_true_case():
    r = theorem_1_4_check(mono("X1^2, X1*X2", 2))
    assert r.consistent and r.value is True


def test_lex_saturation_equivalence_false_case(skew):
    r = theorem_1_4_check(skew)
    assert r.consistent and r.value is False
    assert r.witnesses["first_difference"] is not None


def test_zero_dimensional_ideals_satisfy_everything():
    r = theorem_1_4_check(mono("X1^2, X2^3, X1*X2", 2))
    assert r.consistent and r.value is True


def test_bw_maximality():
    r = bw_maximality_check(mono("X1^2, X1*X2", 2))
    assert r.consistent and r.value is True
    assert r.side == {"t14_consistent": True, "gin_filtration": True, "bw_gin": True}
    # (X1^2) is saturated in two variables, so R/(X1^2) is CM with BW (1 + t)*w
    r = bw_maximality_check(mono("X1*X2", 2))
    assert r.consistent and r.value is True
    r = bw_maximality_check(mono(SKEW, 4))
    assert r.consistent and r.value is False


def test_lemma_4_1_on_gin_lex_pairs():
    for text, n in (("X1*X2", 2), (SKEW, 4), (TWIN, 4), ("X1*X3, X2^2*X3, X3^3", 3)):
        I = mono(text, n)
        assert lemma_4_1_check(gin(I), lex_ideal(I))
    with pytest.raises(ValueError):
        lemma_4_1_check(mono("X2", 2), mono("X1", 2))


def test_j_pair_for_a_critical_ideal():
    I = mono("X1*X2", 2)
    pair = build_j_pair(I, 1)
    assert pair.J == pair.J_prime == mono("X1^2", 1)
    r = corollary_4_5_check(I, 1)
    assert r.consistent and r.value is True


def test_corollary_4_5_on_skew_lines(skew):
    v = Invariants(skew)
    r1 = corollary_4_5_check(skew, 1, v)
    assert r1.consistent and r1.value is False
    r3 = corollary_4_5_check(skew, 3, v)
    assert r3.consistent and r3.value is True


def test_row_two_counterexample(skew):
    """Row 2 of Gin equals row 2 of the lex ideal, but row 2 of R/I differs.

    Gin = (X1^2, X1X2, X2^2, X1X3) and the lex ideal both have h^2 equal to
    that of R/(X1, X2^2), namely 1, 3, 5, ... in degrees -1, -2, -3, ...,
    while R/I is two skew lines with h^2 equal to 0, 2, 4, ....
    """
    v = Invariants(skew)
    assert v.gin == mono("X1^2, X1*X2, X2^2, X1*X3", 4)
    window = (-6, 2)
    ref = cech_table(skew, window)
    ref_gin = cech_table(v.gin, window)
    ref_lex = cech_table(v.lex, window)
    assert [ref[j][2] for j in range(-1, -6, -1)] == [0, 2, 4, 6, 8]
    assert [ref_gin[j][2] for j in range(-1, -6, -1)] == [1, 3, 5, 7, 9]
    assert all(ref_gin[j][2] == ref_lex[j][2] for j in ref)
    # the package agrees with the oracle on all three ideals
    assert rows_equal(v.gin_table, v.lex_table, 2)
    assert not rows_equal(v.table, v.lex_table, 2)
    # so the row propagation statement fails at i = 2 ...
    t44 = theorem_4_4_check(skew, v)
    assert not t44.ok and t44.failures[0][:2] == ("conclusion", 2)
    assert not remark_4_6_a_check(skew, v).ok
    c45 = corollary_4_5_check(skew, 2, v)
    assert not c45.consistent
    assert c45.conditions["i_gin_row"] and not c45.conditions["ii_row"]
    # ... while the hyperplane section R/(I + l) is two reduced points (CM)
    G1 = mono("X1^2, X1*X2, X2^2", 3)  # Gin of I + l, up to the last variable
    assert cohomology_layers(G1).row_is_zero(0)


def test_random_twin_of_the_counterexample():
    I = mono(TWIN, 4)
    v = Invariants(I)
    assert not theorem_4_4_check(I, v).ok
    assert not remark_4_6_a_check(I, v).ok
    assert not corollary_4_5_check(I, 2, v).consistent


def test_row_propagation_holds_for_critical_and_weakly_stable_ideals():
    for text, n in (("X1*X2", 2), ("X1^2, X1*X2", 2), ("X1^2, X1*X2, X2^3, X1*X3^2", 3), ("X1^2, X1*X2, X2^3, X2^2*X3", 4)):
        I = mono(text, n)
        assert theorem_4_4_check(I).ok
        assert remark_4_6_a_check(I).ok


def test_truncated_bw_against_gin_rows():
    for text, n in (("X1^2, X1*X2", 2), ("X1*X2", 2), ("X1^2, X1*X2, X2^3, X1*X3^2", 3)):
        assert remark_4_6_b_check(mono(text, n)).ok
    # on the skew lines the truncated BW polynomials differ at i = 2 even
    # though row 2 of Gin and of the lex ideal agree
    r = remark_4_6_b_check(mono(SKEW, 4))
    assert r.failures == [("mismatch", 2)]


def test_corollary_4_3_on_weakly_stable_examples():
    for text, n in (("X1^2, X1*X2, X2^2, X1*X3", 4), ("X1^2, X1*X2, X2^3, X1*X3^2", 3), ("X1^2, X1*X2, X2^3, X2^2*X3", 4)):
        I = mono(text, n)
        for i in range(1, n):
            assert corollary_4_3_check(I, i).consistent
    with pytest.raises(ValueError):
        corollary_4_3_check(mono("X2", 2), 1)


def test_scan_is_upward_closed(skew):
    scan = corollary_4_5_scan(mono("X1*X2", 2))
    assert all(r.value for r in scan.values())
    scan = corollary_4_5_scan(skew)
    assert scan[1].value is False and scan[3].value is True


def test_scm_profile(skew):
    assert scm_profile(skew) == {0: False, 1: False, 2: False, 3: True}
    assert scm_profile(mono("X1^2, X1*X2", 2)) == {0: True, 1: True, 2: True}


def test_cancellation_pairs(skew):
    w = cancellation_pairs(skew)
    assert w["initial"].is_trivial() and not w["lex"].is_trivial()


def test_universality_bridge():
    assert universality_bridge_check(mono("X1, X2^3", 3)).ok
    assert not universality_bridge_check(MonomialIdeal.unit(2)).applicable
    # saturated lex ideals of positive depth have at most n generators
    L = lex_ideal(mono("X1*X3, X2^2*X3", 3))
    from lexcoh.monomial_ideal import saturate_m

    r = universality_bridge_check(saturate_m(L))
    assert r.ok
