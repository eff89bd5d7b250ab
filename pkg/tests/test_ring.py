import numpy as np
import pytest

from lexcoh.ring import (
    GF32003,
    QQ,
    Field,
    LinearChange,
    Polynomial,
    RingContext,
    RingError,
    TermOrder,
    compare,
    m_index,
    monomials_of_degree,
    parse_monomial,
    specialize_last,
    substitute,
)


def test_degrevlex_follows_the_key_rule():
    # (deg, -e_n, ..., -e_2): X2^2 has no X3, so it is the larger one
    assert compare((0, 2, 0), (1, 0, 1), "degrevlex") > 0
    assert compare((1, 0, 1), (0, 2, 0), "degrevlex") < 0


def test_degrevlex_degree_two_in_three_variables():
    order = TermOrder.degrevlex(3)
    got = sorted(monomials_of_degree(3, 2), key=order.key, reverse=True)
    want = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    assert got == want


def test_lex_and_reflexivity():
    assert compare((1, 0), (0, 1), "lex") > 0
    for name in ("lex", "degrevlex"):
        assert compare((2, 1, 3), (2, 1, 3), name) == 0


@pytest.mark.parametrize("u,n,m", [((2, 0, 1), 3, 3), ((0, 5, 0, 0), 4, 2), ((0, 0), 2, 0)])
def test_m_index(u, n, m):
    assert m_index(u) == m


def test_parse_monomial():
    assert parse_monomial("X1^2*X3", 3) == (2, 0, 1)
    assert parse_monomial("1", 2) == (0, 0)
    with pytest.raises(RingError):
        parse_monomial("X4", 3)


def test_field_arithmetic():
    F = Field(7)
    assert F(10) == 3
    assert F(F.inv(3) * 3) == 1
    assert str(GF32003) == "GF(32003)"
    assert Field.parse("QQ") == QQ
    assert Field.parse("GF(101)") == Field(101)


def test_polynomial_parse_and_print():
    ctx = RingContext(3, QQ)
    f = Polynomial.parse(ctx, "X1^2 - 2*X2*X3 + 1/2*X3^2")
    assert f.is_homogeneous() and f.degree == 2
    assert Polynomial.parse(ctx, str(f)) == f
    assert f.leading_monomial() == (2, 0, 0)


def test_substitution_examples():
    ctx = RingContext(2, QQ)
    P = lambda s: Polynomial.parse(ctx, s)  # noqa: E731
    assert substitute(P("X2"), [P("X1"), P("X1 + X2")], ctx) == P("X1 + X2")
    assert substitute(P("X1*X2"), [P("X1"), P("X1 + X2")], ctx) == P("X1^2 + X1*X2")
    ident = LinearChange.identity(ctx)
    f = P("X1^3 - 5*X1*X2^2")
    assert ident.apply(f) == f


def test_specialize_last():
    ctx = RingContext(2, QQ)
    P = lambda s: Polynomial.parse(ctx, s)  # noqa: E731
    assert str(specialize_last(P("X2"), [1])) == "X1"
    assert specialize_last(P("X1*X2 - X2^2"), [1]).is_zero()


def test_random_change_is_invertible():
    ctx = RingContext(3, GF32003)
    g = LinearChange.random(ctx, np.random.default_rng(5))
    f = Polynomial.parse(ctx, "X1*X2 + X3^2")
    assert g.inverse().apply(g.apply(f)) == f
