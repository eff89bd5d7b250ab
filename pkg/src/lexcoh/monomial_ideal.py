"""Monomial ideals stored by their minimal generators."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .ring import (
    RingError,
    degrevlex_key,
    divides,
    is_pure_power,
    lcm,
    m_index,
    monomial_str,
    parse_monomial,
    var,
)


class MonomialIdeal:
    """Monomial ideal of K[X1..Xn].

    ``gens`` is the minimal generating set in descending degrevlex order.
    The zero ideal has no generators; the unit ideal is generated by 1.
    """

    __slots__ = ("n", "gens", "__dict__")

    def __init__(self, n: int, gens: Iterable = ()):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != n or min(g, default=0) < 0:
                raise RingError(f"bad exponent vector {g} for n={n}")
        self.n = n
        self.gens = tuple(_minimal(gens))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [(0,) * n])

    @classmethod
    def parse(cls, text: str, n: int) -> "MonomialIdeal":
        body = text.strip()
        if body.startswith("ideal(") and body.endswith(")"):
            body = body[6:-1]
        items = [s for s in (t.strip() for t in body.split(",")) if s]
        return cls(n, [parse_monomial(s, n) for s in items])

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @cached_property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def __contains__(self, u) -> bool:
        return any(divides(g, u) for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return all(g in other for g in self.gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.n, self.gens))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.n, self.gens + other.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return "ideal(" + ", ".join(monomial_str(g) for g in self.gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, {self})"

    def add(self, *monomials) -> "MonomialIdeal":
        return MonomialIdeal(self.n, self.gens + tuple(tuple(u) for u in monomials))


def _minimal(gens: list) -> list:
    kept: list = []
    for g in sorted(set(gens), key=sum):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    kept.sort(key=degrevlex_key, reverse=True)
    return kept


def minimalize(gens: Iterable, n: int | None = None) -> MonomialIdeal:
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise RingError("cannot infer n from an empty generator set")
        n = len(gens[0])
    return MonomialIdeal(n, gens)


def _check_var(I: MonomialIdeal, i: int):
    if not 1 <= i <= I.n:
        raise RingError(f"variable index {i} outside 1..{I.n}")


def colon_var_sat(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """I : X_i^infinity."""
    _check_var(I, i)
    return MonomialIdeal(I.n, [g[: i - 1] + (0,) + g[i:] for g in I.gens])


def colon(I: MonomialIdeal, u) -> MonomialIdeal:
    """I : u for a single monomial u."""
    u = tuple(u)
    return MonomialIdeal(I.n, [tuple(max(a - b, 0) for a, b in zip(g, u)) for g in I.gens])


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.n != J.n:
        raise RingError("ideals in different rings")
    return MonomialIdeal(I.n, [lcm(u, v) for u in I.gens for v in J.gens])


def intersect_all(ideals: Iterable[MonomialIdeal], n: int) -> MonomialIdeal:
    """Intersection of a family; the empty family gives the unit ideal."""
    result = MonomialIdeal.unit(n)
    for J in ideals:
        result = intersect(result, J)
    return result


def saturate_m(I: MonomialIdeal) -> MonomialIdeal:
    """I : m^infinity, as the intersection of the I : X_i^infinity."""
    if I.is_zero():
        return I
    return intersect_all((colon_var_sat(I, i) for i in range(1, I.n + 1)), I.n)


def restrict(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """I_[j] = I intersected with K[X1..Xj], as an ideal in j variables."""
    if not 1 <= j <= I.n:
        raise RingError(f"restriction index {j} outside 1..{I.n}")
    return MonomialIdeal(j, [g[:j] for g in I.gens if not any(g[j:])])


def set_last_to_zero(I: MonomialIdeal) -> MonomialIdeal:
    """Image under X_n -> 0; for monomial ideals this is I_[n-1]."""
    if I.n < 2:
        raise RingError("need at least two variables")
    return restrict(I, I.n - 1)


def is_weakly_stable(I: MonomialIdeal) -> bool:
    """For each generator u and j < m(u): u / X_m(u)^l lies in I : X_j^infinity."""
    sats = {}
    for u in I.gens:
        m = m_index(u)
        if m <= 1:
            continue
        w = u[: m - 1] + (0,) + u[m:]
        for j in range(1, m):
            if j not in sats:
                sats[j] = colon_var_sat(I, j)
            if w not in sats[j]:
                return False
    return True


def is_lex_segment(I: MonomialIdeal) -> bool:
    """True iff every graded piece I_d is a top segment in lex order.

    It suffices to check generators: for a generator u of degree d, the
    monomials of degree d lex-above u are the degree-d multiples of
    X1^u1 ... X_{i-1}^u_{i-1} X_i^{u_i + 1} for each i, and those all lie in I
    iff that monomial times m^(d - its degree) is inside I.
    """
    from .hilbert import hilbert_function_at

    n = I.n
    for u in I.gens:
        d = sum(u)
        prefix = 0
        for i in range(n - 1):
            w = u[:i] + (u[i] + 1,) + (0,) * (n - i - 1)
            prefix += u[i]
            r = d - prefix - 1
            if r < 0:
                break
            if w in I:
                continue
            if hilbert_function_at(colon(I, w), r) != 0:
                return False
    return True


@dataclass(frozen=True)
class IrreducibleComponent:
    """Ideal generated by pure powers X_i^a_i, i in the support."""

    powers: tuple  # ((i, a_i), ...) with 1-based i, sorted

    @property
    def support(self) -> tuple:
        return tuple(i for i, _ in self.powers)

    def dimension(self, n: int) -> int:
        return n - len(self.powers)

    def ideal(self, n: int) -> MonomialIdeal:
        return MonomialIdeal(n, [var(n, i, a) for i, a in self.powers])

    def contains(self, other: "IrreducibleComponent") -> bool:
        mine = dict(self.powers)
        return all(i in mine and mine[i] <= a for i, a in other.powers)

    def __str__(self):
        return "(" + ", ".join(f"X{i}^{a}" if a > 1 else f"X{i}" for i, a in self.powers) + ")"


def irreducible_decomposition(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """Irredundant decomposition of I into ideals generated by pure powers.

    Splits the lex-first generator that is not a pure power as
    I = (I + X_k^a) cap (I + u / X_k^a) with k = m(u), then prunes
    components containing another component.
    """
    if I.is_zero():
        raise RingError("irreducible decomposition of the zero ideal is not defined here")
    if I.is_unit():
        return []
    memo: dict = {}
    comps = _decompose(I, memo)
    return sorted(comps, key=lambda c: (len(c.powers), c.powers))


def _prune(comps) -> list:
    uniq = list(dict.fromkeys(comps))
    return [c for c in uniq if not any(d != c and c.contains(d) for d in uniq)]


def _decompose(I: MonomialIdeal, memo: dict) -> list:
    if I.gens in memo:
        return memo[I.gens]
    mixed = [g for g in I.gens if not is_pure_power(g)]
    if not mixed:
        powers = tuple(sorted((m_index(g), g[m_index(g) - 1]) for g in I.gens))
        out = [IrreducibleComponent(powers)]
    else:
        u = max(mixed)  # lex-first
        k = m_index(u)
        left = I.add(var(I.n, k, u[k - 1]))
        right = I.add(u[: k - 1] + (0,) + u[k:])
        out = _prune(_decompose(left, memo) + _decompose(right, memo))
    memo[I.gens] = out
    return out


def dimension(I: MonomialIdeal) -> int:
    """Krull dimension of R/I; -1 for the unit ideal."""
    if I.is_unit():
        return -1
    if I.is_zero():
        return I.n
    if is_weakly_stable(I):
        return _weakly_stable_dimension(I)
    return max(c.dimension(I.n) for c in irreducible_decomposition(I))


def _weakly_stable_dimension(I: MonomialIdeal) -> int:
    # associated primes are (X1..Xr); R/I has dimension n - r_min
    J = I
    for k in range(I.n):
        J = colon_var_sat(J, I.n - k)
        if J.is_unit():
            return k
    return I.n


def filtration_ideal(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """I^<i>: intersection of the irreducible components of dimension > i."""
    d = dimension(I)
    if not -1 <= i <= max(d, -1):
        raise RingError(f"filtration index {i} outside -1..{d}")
    if i == -1:
        return I
    if I.is_zero():
        return I if i < I.n else MonomialIdeal.unit(I.n)
    if is_weakly_stable(I):
        # components have primes (X1..Xr); those of dimension <= i contain X_{n-i}
        J = I
        for k in range(i + 1):
            J = colon_var_sat(J, I.n - k)
        return J
    comps = [c for c in irreducible_decomposition(I) if c.dimension(I.n) > i]
    return intersect_all((c.ideal(I.n) for c in comps), I.n)


def filtration_ideal_by_decomposition(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Same as :func:`filtration_ideal` but always through the decomposition."""
    if i == -1:
        return I
    if I.is_zero():
        return I if i < I.n else MonomialIdeal.unit(I.n)
    comps = [c for c in irreducible_decomposition(I) if c.dimension(I.n) > i]
    return intersect_all((c.ideal(I.n) for c in comps), I.n)


@dataclass(frozen=True)
class DimensionFiltration:
    """I = I^<-1> <= I^<0> <= ... <= I^<d> = (1), d = dim R/I."""

    ideals: tuple

    @property
    def dim(self) -> int:
        return len(self.ideals) - 2

    def __getitem__(self, i: int) -> MonomialIdeal:
        return self.ideals[i + 1]

    def __iter__(self):
        return iter(self.ideals)


def dimension_filtration(I: MonomialIdeal) -> DimensionFiltration:
    if I.is_unit():
        raise RingError("the unit ideal has no dimension filtration")
    d = dimension(I)
    chain = tuple(filtration_ideal(I, i) for i in range(-1, d + 1))
    for a, b in zip(chain, chain[1:]):
        if not a <= b:
            raise AssertionError("dimension filtration is not ascending")
    if chain[1] != saturate_m(I) or not chain[-1].is_unit():
        raise AssertionError("dimension filtration endpoints are wrong")
    return DimensionFiltration(chain)
