"""Exponent-tuple monomials, term orders, scalar fields and polynomials.

Monomials are plain tuples of non-negative integers; ``X1^2*X3`` in three
variables is ``(2, 0, 1)``.  Variable indices in the public API are
1-based, matching the ``X1..Xn`` naming.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

MAX_VARS = 16
DEFAULT_PRIME = 32003

Monomial = tuple


class RingError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """Scalar domain: the rationals (``p == 0``) or GF(p) for an odd prime p.

    Elements of GF(p) are ints in ``range(p)``; rationals are Fractions.
    """

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p != 0 and (self.p == 2 or not _is_prime(self.p)):
            raise RingError(f"field characteristic must be 0 or an odd prime, got {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __call__(self, x):
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, str):
            return self(Fraction(x))
        return int(x) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / Fraction(a)
        return pow(int(a), -1, self.p)

    def random_element(self, rng, nonzero: bool = False, bound: int = 10):
        """Uniform element of GF(p); small integers in [-bound, bound] over QQ."""
        if self.p:
            lo = 1 if nonzero else 0
            return int(rng.integers(lo, self.p))
        while True:
            c = Fraction(int(rng.integers(-bound, bound + 1)))
            if c or not nonzero:
                return c

    def to_str(self, c) -> str:
        if self.p:
            c = int(c)
            return str(c - self.p if c > self.p // 2 else c)
        return str(c)

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip()
        if t.upper() in ("QQ", "Q", "0"):
            return cls(0)
        m = re.fullmatch(r"(?:GF\()?\s*(\d+)\s*\)?", t, flags=re.IGNORECASE)
        if not m:
            raise RingError(f"unrecognized field {text!r}")
        return cls(int(m.group(1)))


QQ = Field(0)
GF32003 = Field(DEFAULT_PRIME)


@dataclass(frozen=True)
class RingContext:
    """K[X1..Xn] over ``field``."""

    n: int
    field: Field = GF32003

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARS:
            raise RingError(f"number of variables must be in 1..{MAX_VARS}, got {self.n}")

    def sub(self, j: int) -> "RingContext":
        """Context of R_[j] = K[X1..Xj]."""
        return RingContext(j, self.field)

    @property
    def variables(self) -> list[str]:
        return [f"X{i}" for i in range(1, self.n + 1)]


# --- monomials -------------------------------------------------------------


def one(n: int) -> Monomial:
    return (0,) * n


def var(n: int, i: int, e: int = 1) -> Monomial:
    """X_i^e in n variables (i is 1-based)."""
    u = [0] * n
    u[i - 1] = e
    return tuple(u)


def degree(u: Monomial) -> int:
    return sum(u)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def quo(v: Monomial, u: Monomial) -> Monomial:
    """v / u, assuming u divides v."""
    return tuple(b - a for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def is_pure_power(u: Monomial) -> bool:
    return sum(1 for a in u if a) <= 1


def m_index(u: Monomial) -> int:
    """Largest i with X_i dividing u; 0 for the monomial 1."""
    for i in range(len(u), 0, -1):
        if u[i - 1]:
            return i
    return 0


def support(u: Monomial) -> tuple[int, ...]:
    return tuple(i + 1 for i, a in enumerate(u) if a)


def monomial_str(u: Monomial) -> str:
    parts = []
    for i, a in enumerate(u, 1):
        if a == 1:
            parts.append(f"X{i}")
        elif a:
            parts.append(f"X{i}^{a}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^X(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    text = text.strip()
    if text == "1":
        return one(n)
    u = [0] * n
    for f in text.split("*"):
        m = _FACTOR.match(f.strip())
        if not m:
            raise RingError(f"bad monomial factor {f!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise RingError(f"variable X{i} outside X1..X{n}")
        u[i - 1] += int(m.group(2) or 1)
    return tuple(u)


# --- term orders -----------------------------------------------------------


class TermOrder:
    """A monomial order given by an integer weight matrix.

    ``key(u)`` is a tuple whose lexicographic comparison realizes the order
    (larger key = larger monomial).  The key map is linear, so keys of
    products are sums of keys.
    """

    def __init__(self, name: str, weights: Sequence[Sequence[int]]):
        self.name = name
        self.weights = tuple(tuple(w) for w in weights)

    def key(self, u: Monomial) -> tuple:
        return tuple(sum(w * a for w, a in zip(row, u)) for row in self.weights)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"TermOrder({self.name!r}, n={len(self.weights)})"

    @classmethod
    def lex(cls, n: int) -> "TermOrder":
        return cls("lex", [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def degrevlex(cls, n: int) -> "TermOrder":
        # degree first, then the smaller exponent of the last differing variable wins
        rows = [[1] * n]
        for i in range(n - 1, 0, -1):
            rows.append([-int(j == i) for j in range(n)])
        return cls("degrevlex", rows)

    @classmethod
    def named(cls, name: str, n: int) -> "TermOrder":
        if name == "lex":
            return cls.lex(n)
        if name in ("degrevlex", "revlex", "grevlex"):
            return cls.degrevlex(n)
        raise RingError(f"unknown term order {name!r}")


def compare(u: Monomial, v: Monomial, order: TermOrder | str = "degrevlex") -> int:
    """-1, 0 or 1 as u is smaller than, equal to or larger than v."""
    if len(u) != len(v):
        raise RingError("monomials of different arity")
    if isinstance(order, str):
        order = TermOrder.named(order, len(u))
    ku, kv = order.key(u), order.key(v)
    return (ku > kv) - (ku < kv)


def degrevlex_key(u: Monomial) -> tuple:
    return (sum(u),) + tuple(-a for a in reversed(u[1:]))


def lex_key(u: Monomial) -> tuple:
    return u


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All degree-d monomials in n variables, descending lex order."""
    if d < 0:
        return []
    if n == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - a):
            out.append((a,) + rest)
    return out


# --- polynomials -----------------------------------------------------------


class Polynomial:
    """Immutable polynomial: mapping monomial -> nonzero scalar."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: RingContext, terms: Mapping[Monomial, object] | None = None, *, _clean=False):
        self.ctx = ctx
        if _clean:
            self.terms = dict(terms)
        else:
            F = ctx.field
            clean = {}
            for u, c in (terms or {}).items():
                u = tuple(u)
                if len(u) != ctx.n or min(u, default=0) < 0:
                    raise RingError(f"bad exponent vector {u} for n={ctx.n}")
                c = F(c)
                if c:
                    s = clean.get(u)
                    s = c if s is None else (s + c if F.p == 0 else (s + c) % F.p)
                    if s:
                        clean[u] = s
                    else:
                        clean.pop(u, None)
            self.terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, ctx: RingContext, u: Monomial, c=1) -> "Polynomial":
        return cls(ctx, {tuple(u): c})

    @classmethod
    def variable(cls, ctx: RingContext, i: int) -> "Polynomial":
        return cls(ctx, {var(ctx.n, i): 1})

    @classmethod
    def constant(cls, ctx: RingContext, c) -> "Polynomial":
        return cls(ctx, {one(ctx.n): c})

    @classmethod
    def zero(cls, ctx: RingContext) -> "Polynomial":
        return cls(ctx, {}, _clean=True)

    # -- structure
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(u) for u in self.terms}) <= 1

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(u) for u in self.terms), default=-1)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_term(self, order: TermOrder | None = None):
        if not self.terms:
            raise RingError("zero polynomial has no leading term")
        order = order or TermOrder.degrevlex(self.ctx.n)
        u = max(self.terms, key=order.key)
        return u, self.terms[u]

    def leading_monomial(self, order: TermOrder | None = None) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: TermOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self * self.ctx.field.inv(c)

    # -- arithmetic
    def _check(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.ctx, other)
        if other.ctx != self.ctx:
            raise RingError("polynomials from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.ctx.field.p
        t = dict(self.terms)
        for u, c in other.terms.items():
            s = t.get(u, 0) + c
            if p:
                s %= p
            if s:
                t[u] = s
            else:
                t.pop(u, None)
        return Polynomial(self.ctx, t, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.field.p
        return Polynomial(self.ctx, {u: (-c) % p if p else -c for u, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        F = self.ctx.field
        if not isinstance(other, Polynomial):
            c = F(other)
            if not c:
                return Polynomial.zero(self.ctx)
            return Polynomial(
                self.ctx,
                {u: (a * c) % F.p if F.p else a * c for u, a in self.terms.items()},
                _clean=True,
            )
        other = self._check(other)
        p = F.p
        t: dict = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = tuple(x + y for x, y in zip(u, v))
                t[w] = t.get(w, 0) + a * b
        if p:
            t = {u: c % p for u, c in t.items()}
        return Polynomial(self.ctx, {u: c for u, c in t.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise RingError("negative power")
        result = Polynomial.constant(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self, order: TermOrder | None = None) -> list:
        order = order or TermOrder.degrevlex(self.ctx.n)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.ctx.field
        out = []
        for u, c in self.sorted_terms():
            s = F.to_str(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            mono = monomial_str(u)
            if mono == "1":
                body = s
            elif s == "1":
                body = mono
            else:
                body = f"{s}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"

    @classmethod
    def parse(cls, ctx: RingContext, text: str) -> "Polynomial":
        """Parse ``3/2*X1^2*X3 - X2 + 5``."""
        s = text.replace(" ", "")
        if not s:
            raise RingError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        terms = re.findall(r"[+-][^+-]+", s)
        if "".join(terms) != s:
            raise RingError(f"cannot parse polynomial {text!r}")
        F = ctx.field
        acc: dict = {}
        for t in terms:
            sign = -1 if t[0] == "-" else 1
            coeff = Fraction(sign)
            u = [0] * ctx.n
            for f in t[1:].split("*"):
                if re.fullmatch(r"\d+(/\d+)?", f):
                    coeff *= Fraction(f)
                    continue
                m = _FACTOR.match(f)
                if not m:
                    raise RingError(f"bad factor {f!r} in {text!r}")
                i = int(m.group(1))
                if not 1 <= i <= ctx.n:
                    raise RingError(f"variable X{i} outside X1..X{ctx.n}")
                u[i - 1] += int(m.group(2) or 1)
            u = tuple(u)
            acc[u] = acc.get(u, 0) + coeff
        return cls(ctx, {u: F(c) for u, c in acc.items()})


# --- linear changes of coordinates -------------------------------------------


def _solve_inverse(F: Field, M: list[list]) -> list[list] | None:
    """Gauss-Jordan inverse over F; None if singular."""
    n = len(M)
    p = F.p
    A = [list(row) + [F(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return None
        A[c], A[piv] = A[piv], A[c]
        inv = F.inv(A[c][c])
        A[c] = [(x * inv) % p if p else x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [(x - f * y) % p if p else x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


class LinearChange:
    """Substitution X_i -> sum_j matrix[i][j] * X_j, required invertible."""

    def __init__(self, ctx: RingContext, matrix: Sequence[Sequence]):
        F = ctx.field
        M = [[F(x) for x in row] for row in matrix]
        if len(M) != ctx.n or any(len(r) != ctx.n for r in M):
            raise RingError("linear change must be an n x n matrix")
        inv = _solve_inverse(F, M)
        if inv is None:
            raise RingError("singular linear change")
        self.ctx = ctx
        self.matrix = tuple(tuple(r) for r in M)
        self._inverse = inv
        self._images = [Polynomial(ctx, {var(ctx.n, j + 1): c for j, c in enumerate(r)}) for r in M]

    @classmethod
    def identity(cls, ctx: RingContext) -> "LinearChange":
        return cls(ctx, [[int(i == j) for j in range(ctx.n)] for i in range(ctx.n)])

    @classmethod
    def random(cls, ctx: RingContext, rng) -> "LinearChange":
        while True:
            M = [[ctx.field.random_element(rng) for _ in range(ctx.n)] for _ in range(ctx.n)]
            try:
                return cls(ctx, M)
            except RingError:
                continue

    def inverse(self) -> "LinearChange":
        return LinearChange(self.ctx, self._inverse)

    def apply(self, f: Polynomial) -> Polynomial:
        if f.ctx != self.ctx:
            raise RingError("arity mismatch")
        return substitute(f, self._images, self.ctx)


def substitute(f: Polynomial, images: Sequence[Polynomial], target: RingContext) -> Polynomial:
    """f(images[0], ..., images[n-1]) expanded in ``target``."""
    powers: dict = {}

    def pw(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = Polynomial.constant(target, 1) if e == 0 else pw(i, e - 1) * images[i]
        return powers[key]

    result = Polynomial.zero(target)
    for u, c in f.terms.items():
        term = Polynomial.constant(target, c)
        for i, e in enumerate(u):
            if e:
                term = term * pw(i, e)
        result = result + term
    return result


def apply_change(f: Polynomial, g: LinearChange) -> Polynomial:
    return g.apply(f)


def specialize_last(f: Polynomial, coeffs: Sequence) -> Polynomial:
    """X_n -> a_1 X_1 + ... + a_{n-1} X_{n-1}; result lives in n-1 variables."""
    n = f.ctx.n
    if n < 2:
        raise RingError("specialize_last needs at least two variables")
    if len(coeffs) != n - 1:
        raise RingError(f"expected {n - 1} coefficients")
    target = f.ctx.sub(n - 1)
    images = [Polynomial.variable(target, i) for i in range(1, n)]
    images.append(Polynomial(target, {var(n - 1, i + 1): c for i, c in enumerate(coeffs)}))
    return substitute(f, images, target)


def polynomials_from(ctx: RingContext, items: Iterable) -> list[Polynomial]:
    out = []
    for it in items:
        if isinstance(it, Polynomial):
            out.append(it)
        elif isinstance(it, str):
            out.append(Polynomial.parse(ctx, it))
        else:
            out.append(Polynomial.monomial(ctx, tuple(it)))
    return out
