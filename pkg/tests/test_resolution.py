import pytest

from conftest import mono, poly_ideal
from lexcoh.hilbert import hilbert_numerator
from lexcoh.monomial_ideal import MonomialIdeal
from lexcoh.resolution import check_exactness, resolution, schreyer_resolution, taylor_resolution
from lexcoh.ring import QQ, RingError


def test_taylor_principal_and_koszul():
    R = taylor_resolution(mono("X1", 1))
    assert R.degrees == [[0], [1]]
    R = taylor_resolution(mono("X1, X2", 2))
    assert R.ranks() == [1, 2, 1]


def test_taylor_twists():
    R = taylor_resolution(mono("X1^2, X1*X2", 2))
    assert R.ranks() == [1, 2, 1]
    assert sorted(R.degrees[1]) == [2, 2] and R.degrees[2] == [3]
    assert R.check_composition() and R.check_homogeneous()


def test_unit_ideal_has_no_resolution():
    with pytest.raises(RingError):
        taylor_resolution(MonomialIdeal.unit(2))


def test_schreyer_examples():
    R = schreyer_resolution(poly_ideal("X1^2 + X2^2", 2))
    assert R.degrees == [[0], [2]]
    R = schreyer_resolution(poly_ideal("X1, X2, X3", 3))
    assert R.ranks() == [1, 3, 3, 1]
    R = schreyer_resolution(poly_ideal("X1^2 - X2^2, X1*X2", 2, QQ))
    assert R.ranks() == [1, 2, 1] and R.degrees[2] == [4]


@pytest.mark.parametrize("text,n", [("X1*X3, X1*X4, X2*X3, X2*X4", 4), ("X1^2*X2, X2^2*X3, X1*X3^2", 3)])
def test_resolutions_are_exact_complexes(text, n):
    I = mono(text, n)
    H = hilbert_numerator(I)
    for R in (taylor_resolution(I), schreyer_resolution(poly_ideal(text, n))):
        assert R.check_composition() and R.check_homogeneous()
        assert R.hilbert_series() == H
        assert check_exactness(R, range(0, 7), lambda e: H[e])


def test_schreyer_on_a_twisted_cubic():
    J = poly_ideal("X1*X3 - X2^2, X1*X4 - X2*X3, X2*X4 - X3^2", 4)
    R = resolution(J)
    assert R.ranks() == [1, 3, 2]
    assert R.hilbert_series() == J.hilbert_series
    assert check_exactness(R, range(5), lambda e: J.hilbert_series[e])


def test_minimized_taylor_gives_betti_numbers():
    I = mono("X1^2, X1*X2, X2^2", 2)
    assert taylor_resolution(I).ranks() == [1, 3, 3, 1]
    M = resolution(I, minimal=True)
    assert M.degrees == [[0], [2, 2, 2], [3, 3]]
    assert M.check_composition() and check_exactness(M, range(6), lambda e: hilbert_numerator(I)[e])


def test_minimal_resolutions_agree_across_routes():
    text = "X1^3, X1*X2*X3, X2^2*X3, X3^3"
    T = resolution(mono(text, 3), minimal=True)
    S = schreyer_resolution(poly_ideal(text, 3, QQ))
    assert [sorted(d) for d in T.degrees] == [sorted(d) for d in S.degrees]
