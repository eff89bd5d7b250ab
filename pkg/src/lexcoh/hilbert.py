"""Hilbert series of monomial quotients, Macaulay/Gotzmann calculus, lex ideals."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb, factorial
from typing import Iterable, Sequence

from .monomial_ideal import MonomialIdeal, colon, is_lex_segment
from .ring import RingError, var


class LexConstructionError(RuntimeError):
    """Hilbert function growth beyond the Macaulay bound (an upstream bug)."""


# --- integer polynomials in t (lists of coefficients, index = exponent) -----


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(a: Sequence[int], b: Sequence[int]) -> list:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def poly_sub(a: Sequence[int], b: Sequence[int]) -> list:
    return poly_add(a, [-c for c in b])


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_shift(a: Sequence[int], k: int) -> list:
    return [0] * k + list(a) if a else []


def one_minus_t_power(k: int) -> list:
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


def divide_one_minus_t(a: Sequence[int]) -> list:
    """Exact quotient a(t) / (1 - t); a(1) must vanish."""
    if sum(a) != 0:
        raise ValueError("not divisible by 1 - t")
    out, acc = [], 0
    for c in a[:-1]:
        acc += c
        out.append(acc)
    return _trim(out)


def binomial(x: int, m: int) -> int:
    """C(x, m) as the polynomial x(x-1)...(x-m+1)/m!, valid for negative x."""
    if m < 0:
        return 0
    num = 1
    for i in range(m):
        num *= x - i
    return num // factorial(m)


# --- Hilbert series and polynomials --------------------------------------------


@dataclass(frozen=True)
class HilbertPolynomial:
    """P(j) = sum_i coefficients[i] * C(j + i, i)."""

    coefficients: tuple

    @classmethod
    def from_reduced(cls, h: Sequence[int], d: int) -> "HilbertPolynomial":
        if d <= 0:
            return cls(())

        def value(j):
            return sum(c * binomial(j - k + d - 1, d - 1) for k, c in enumerate(h))

        # c_k is the k-th backward difference of P at j = -1
        coeffs = []
        for k in range(d):
            coeffs.append(sum((-1) ** r * comb(k, r) * value(-1 - r) for r in range(k + 1)))
        return cls(tuple(_trim(coeffs)))

    def __call__(self, j: int) -> int:
        return sum(c * binomial(j + i, i) for i, c in enumerate(self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __str__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"{c}*C(j+{i},{i})" for i, c in enumerate(self.coefficients) if c)


class HilbertSeries:
    """numerator(t) / (1 - t)^n with integer numerator."""

    __slots__ = ("numerator", "n", "__dict__")

    def __init__(self, numerator: Iterable[int], n: int):
        self.numerator = tuple(_trim(list(numerator)))
        self.n = n

    @cached_property
    def reduced(self) -> tuple:
        """(h, d) with all factors 1 - t cancelled; d is the pole order."""
        h = list(self.numerator)
        d = self.n
        if not h:
            return (), -1
        while d > 0 and sum(h) == 0:
            h = divide_one_minus_t(h)
            d -= 1
        return tuple(h), d

    @property
    def dimension(self) -> int:
        return self.reduced[1]

    @property
    def multiplicity(self) -> int:
        return sum(self.reduced[0])

    def __getitem__(self, j: int) -> int:
        """Value of the Hilbert function in degree j."""
        if j < 0:
            return 0
        n = self.n
        return sum(c * comb(j - k + n - 1, n - 1) for k, c in enumerate(self.numerator) if k <= j)

    def values(self, js: Iterable[int]) -> list:
        return [self[j] for j in js]

    @cached_property
    def polynomial(self) -> HilbertPolynomial:
        h, d = self.reduced
        return HilbertPolynomial.from_reduced(h, d)

    @cached_property
    def regularity_index(self) -> int:
        """Least d >= 0 with H(j) = P(j) for all j >= d."""
        h, dim = self.reduced
        P = self.polynomial
        d = max(0, len(h) - 1 - dim + 1)
        while d > 0 and self[d - 1] == P(d - 1):
            d -= 1
        return d

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.reduced == other.reduced

    def __hash__(self):
        return hash(self.reduced)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        if self.n != other.n:
            raise RingError("series over different rings")
        return HilbertSeries(poly_sub(self.numerator, other.numerator), self.n)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        if self.n != other.n:
            raise RingError("series over different rings")
        return HilbertSeries(poly_add(self.numerator, other.numerator), self.n)

    def __str__(self):
        return f"{format_tpoly(self.numerator)} / (1-t)^{self.n}"

    def __repr__(self):
        return f"HilbertSeries({self})"


def format_tpoly(a: Sequence[int], var_name: str = "t") -> str:
    if not any(a):
        return "0"
    out = []
    for k, c in enumerate(a):
        if not c:
            continue
        mono = "" if k == 0 else (var_name if k == 1 else f"{var_name}^{k}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def hilbert_numerator(I: MonomialIdeal) -> HilbertSeries:
    """Hilbert series of R/I by pivot splitting.

    K(I) = K(I + (p)) + t^deg(p) K(I : p) with p = X_i^e, X_i the variable
    occurring in the most non-pure-power generators and e a median exponent.
    """
    memo: dict = {}
    return HilbertSeries(_kpoly(I, memo), I.n)


def _kpoly(I: MonomialIdeal, memo: dict) -> list:
    key = I.gens
    if key in memo:
        return memo[key]
    gens = I.gens
    if not gens:
        out = [1]
    elif I.is_unit():
        out = []
    else:
        out = _base_case(gens)
        if out is None:
            p = _pivot(gens, I.n)
            left = _kpoly(I.add(p), memo)
            right = _kpoly(colon(I, p), memo)
            out = poly_add(left, poly_shift(right, sum(p)))
    memo[key] = out
    return out


def _base_case(gens) -> list | None:
    seen = [0] * len(gens[0])
    for g in gens:
        for i, a in enumerate(g):
            if a:
                if seen[i]:
                    return None
                seen[i] = 1
    # pairwise coprime generators form a regular sequence
    out = [1]
    for g in gens:
        out = poly_mul(out, [1] + [0] * (sum(g) - 1) + [-1])
    return out


def _pivot(gens, n):
    counts = [0] * n
    for g in gens:
        if sum(1 for a in g if a) > 1:
            for i, a in enumerate(g):
                if a:
                    counts[i] += 1
    i = max(range(n), key=lambda k: counts[k])
    exps = sorted(g[i] for g in gens if g[i] and sum(1 for a in g if a) > 1)
    e = exps[(len(exps) - 1) // 2]
    pure = [g[i] for g in gens if g[i] and sum(g) == g[i]]
    if pure:
        e = min(e, pure[0] - 1)
    return var(n, i + 1, max(e, 1))


def hilbert_function(I: MonomialIdeal, js: Iterable[int]) -> list:
    return hilbert_numerator(I).values(js)


def hilbert_function_at(I: MonomialIdeal, j: int) -> int:
    return hilbert_numerator(I)[j]


def hilbert_polynomial(I: MonomialIdeal) -> HilbertPolynomial:
    return hilbert_numerator(I).polynomial


def hilbert_function_bruteforce(I: MonomialIdeal, j: int) -> int:
    """Count degree-j monomials outside I (independent check)."""
    from .ring import monomials_of_degree

    return sum(1 for u in monomials_of_degree(I.n, j) if u not in I)


# --- Macaulay and Gotzmann calculus -------------------------------------------


def macaulay_rep(a: int, d: int) -> list:
    """a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_e, e), k_d > ... > k_e >= e >= 1.

    Returned as [(k_d, d), (k_{d-1}, d-1), ...].
    """
    if a < 0 or d < 1:
        raise ValueError("macaulay_rep needs a >= 0 and d >= 1")
    out = []
    i = d
    while a > 0:
        k = i
        while comb(k + 1, i) <= a:
            k += 1
        out.append((k, i))
        a -= comb(k, i)
        i -= 1
    return out


def growth_bound(a: int, d: int) -> int:
    """a^<d>: the largest possible value in degree d+1 after the value a in degree d."""
    return sum(comb(k + 1, i + 1) for k, i in macaulay_rep(a, d))


def gotzmann_number(P: HilbertPolynomial, max_terms: int = 10**6) -> int:
    """Number s of terms in P(j) = sum_{i=1..s} C(j + a_i - i + 1, a_i), a_1 >= ... >= a_s."""
    c = list(P.coefficients)
    s = 0
    while c:
        a = len(c) - 1
        if c[a] <= 0:
            raise ValueError(f"{P} is not a Hilbert polynomial")
        c[a] -= 1
        # R(j) = P(j) - C(j+a, a); continue with R(j + 1)
        c = [sum(c[k:]) for k in range(len(c))]
        _trim(c)
        s += 1
        if s > max_terms:
            raise ValueError("Gotzmann representation too long")
    return s


def lex_first(n: int, d: int, rank: int) -> tuple:
    """Degree-d monomial of the given 0-based rank in descending lex order."""
    u = []
    rem = d
    for i in range(n - 1):
        left = n - i - 1
        for e in range(rem, -1, -1):
            cnt = comb(left - 1 + rem - e, left - 1)
            if rank < cnt:
                u.append(e)
                rem -= e
                break
            rank -= cnt
    u.append(rem)
    return tuple(u)


def lex_next(u: tuple) -> tuple | None:
    """Successor of u in descending lex order among monomials of its degree."""
    n = len(u)
    for i in range(n - 2, -1, -1):
        if u[i]:
            tail = sum(u[i + 1 :])
            return u[:i] + (u[i] - 1, tail + 1) + (0,) * (n - i - 2)
    return None


@dataclass(frozen=True)
class LexCertificate:
    gotzmann: int
    agreement_degree: int
    stop_degree: int


def lex_ideal(I: MonomialIdeal) -> MonomialIdeal:
    return lex_ideal_from_series(hilbert_numerator(I))


def lex_ideal_with_certificate(I) -> tuple:
    """(lex ideal, certificate); ``I`` is a MonomialIdeal or a HilbertSeries."""
    return _lex(I if isinstance(I, HilbertSeries) else hilbert_numerator(I))


def lex_ideal_from_series(H: HilbertSeries) -> MonomialIdeal:
    return _lex(H)[0]


def _lex(H: HilbertSeries) -> tuple:
    n = H.n
    if H[0] == 0:
        return MonomialIdeal.unit(n), LexCertificate(0, 0, 0)
    G = gotzmann_number(H.polynomial)
    d0 = H.regularity_index
    D = max(G, d0) + 1
    gens = []
    prev = 1  # H(0)
    for d in range(1, D + 1):
        cur = H[d]
        bound = n if d == 1 else growth_bound(prev, d - 1)
        if cur > bound:
            raise LexConstructionError(f"H({d}) = {cur} exceeds Macaulay bound {bound}")
        new = bound - cur
        if new:
            if d == D:
                raise LexConstructionError(f"lex generators found in certificate degree {D}")
            total = comb(n - 1 + d, d)
            u = lex_first(n, d, total - bound)
            for _ in range(new):
                gens.append(u)
                u = lex_next(u)
        prev = cur
    return MonomialIdeal(n, gens), LexCertificate(G, d0, D)


def is_universal_lex(L: MonomialIdeal) -> bool:
    if not is_lex_segment(L):
        raise ValueError(f"{L} is not a lex-segment ideal")
    return len(L.gens) <= L.n


def is_critical(I: MonomialIdeal) -> bool:
    return is_universal_lex(lex_ideal(I))


def depth_formula_check(I: MonomialIdeal) -> bool:
    """For critical I: depth R/I (from local cohomology) equals n - |G(I^lex)|."""
    from .cohomology import cohomology_table, depth_and_dim

    if not is_critical(I):
        raise ValueError("depth formula applies to critical ideals only")
    if I.is_zero():
        return True
    L = lex_ideal(I)
    depth, _ = depth_and_dim(cohomology_table(I))
    return depth == I.n - len(L.gens)
