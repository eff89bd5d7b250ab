"""Buchberger's algorithm, initial ideals and generic initial ideals.

Internally a polynomial (or a free-module vector) is a list of terms
``(key, comp, exp, coeff)`` sorted by descending ``key``.  ``key`` realizes
the term order: for ideals it is the order's weight vector applied to
``exp``; for free modules carrying a Schreyer order it is the key of the
monomial image followed by component tie-breakers (see resolution.py).
"""
from __future__ import annotations

import heapq
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .hilbert import HilbertSeries, hilbert_numerator
from .linalg import echelon_mod_p
from .monomial_ideal import MonomialIdeal, restrict
from .ring import (
    GF32003,
    Field,
    LinearChange,
    Polynomial,
    RingContext,
    RingError,
    TermOrder,
    divides,
    lcm,
    monomials_of_degree,
    polynomials_from,
    specialize_last,
)


class GinCertificationError(RuntimeError):
    """Independent random coordinate changes gave different initial ideals."""

    def __init__(self, results):
        self.results = results
        super().__init__("generic initial ideal trials disagree: " + " vs ".join(str(r) for r in results))


# --- term-list engine ---------------------------------------------------------


class Frame:
    """Term keys of a free module R^r with an order induced from ``order``.

    Term x^a e_i has key order.key(a + offsets[i]) + ties[i].  The ideal
    case is a single component with zero offset and no tie.
    """

    def __init__(self, order: TermOrder, offsets: Sequence[tuple], ties: Sequence[tuple]):
        self.order = order
        self.offsets = list(offsets)
        self.ties = list(ties)
        self.nw = len(order.weights)

    @classmethod
    def ideal(cls, order: TermOrder, n: int) -> "Frame":
        return cls(order, [(0,) * n], [()])

    def key(self, comp: int, exp: tuple) -> tuple:
        off = self.offsets[comp]
        return self.order.key(tuple(a + b for a, b in zip(exp, off))) + self.ties[comp]

    def shift(self, b: tuple) -> tuple:
        return self.order.key(b)


def _norm(c, p):
    return c % p if p else c


def to_terms(f: Polynomial, frame: Frame, comp: int = 0) -> list:
    out = [(frame.key(comp, u), comp, u, c) for u, c in f.terms.items()]
    out.sort(key=lambda t: t[0], reverse=True)
    return out


def from_terms(ctx: RingContext, terms: list) -> Polynomial:
    return Polynomial(ctx, {t[2]: t[3] for t in terms}, _clean=True)


def sub_mul(f: list, c, b: tuple, g: list, frame: Frame, p: int) -> list:
    """f - c * x^b * g, merged in key order."""
    nw = frame.nw
    sh = frame.shift(b)
    h = []
    for key, comp, exp, a in g:
        k = tuple(x + y for x, y in zip(key[:nw], sh)) + key[nw:]
        h.append((k, comp, tuple(x + y for x, y in zip(exp, b)), _norm(-c * a, p)))
    out = []
    i = j = 0
    lf, lh = len(f), len(h)
    while i < lf and j < lh:
        kf, kh = f[i][0], h[j][0]
        if kf > kh:
            out.append(f[i])
            i += 1
        elif kh > kf:
            out.append(h[j])
            j += 1
        else:
            s = _norm(f[i][3] + h[j][3], p)
            if s:
                out.append((kf, f[i][1], f[i][2], s))
            i += 1
            j += 1
    out.extend(f[i:])
    out.extend(h[j:])
    return out


def scale(f: list, c, p: int) -> list:
    return [(k, comp, e, _norm(a * c, p)) for k, comp, e, a in f]


def make_monic(f: list, field: Field) -> list:
    if not f or f[0][3] == 1:
        return f
    return scale(f, field.inv(f[0][3]), field.p)


def reduce_terms(f: list, basis: Sequence[list], frame: Frame, p: int, full: bool = True, record: bool = False):
    """Divide f by monic ``basis``; returns (remainder, quotients).

    quotients[k] is a list of (monomial, coeff) pairs: f = sum q_k g_k + rem.
    """
    by_comp: dict = {}
    for k, g in enumerate(basis):
        if g:
            by_comp.setdefault(g[0][1], []).append((g[0][2], k))
    rem = []
    quots = [[] for _ in basis] if record else None
    while f:
        _, comp, exp, c = f[0]
        for lead, k in by_comp.get(comp, ()):
            if divides(lead, exp):
                b = tuple(x - y for x, y in zip(exp, lead))
                f = sub_mul(f, c, b, basis[k], frame, p)
                if record:
                    quots[k].append((b, c))
                break
        else:
            if not full:
                rem.extend(f)
                break
            rem.append(f[0])
            f = f[1:]
    return rem, quots


def groebner_terms(polys: Iterable[list], frame: Frame, field: Field) -> list:
    """Reduced Groebner basis (monic term lists) of the ideal spanned by polys."""
    p = field.p
    G: list = []
    pairs: list = []
    pending: set = set()

    def add(h):
        h = make_monic(h, field)
        i = len(G)
        G.append(h)
        for j in range(i):
            if G[j] is None:
                continue
            uj, ui = G[j][0][2], h[0][2]
            m = lcm(uj, ui)
            if all(a == 0 or b == 0 for a, b in zip(uj, ui)):
                continue  # coprime leading monomials
            heapq.heappush(pairs, (sum(m), j, i))
            pending.add((j, i))

    for f in polys:
        if f:
            f, _ = reduce_terms(f, [g for g in G if g is not None], frame, p)
            if f:
                add(f)
    while pairs:
        _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        if G[i] is None or G[j] is None:
            continue
        ui, uj = G[i][0][2], G[j][0][2]
        m = lcm(ui, uj)
        if _chain_criterion(G, i, j, m, pending):
            continue
        s = sub_mul(
            [(k, c, e, a) for k, c, e, a in _mult(G[i], tuple(x - y for x, y in zip(m, ui)), frame)],
            1,
            tuple(x - y for x, y in zip(m, uj)),
            G[j],
            frame,
            p,
        )
        h, _ = reduce_terms(s, [g for g in G if g is not None], frame, p)
        if h:
            add(h)
    return _interreduce([g for g in G if g is not None], frame, field)


def _chain_criterion(G, i, j, m, pending) -> bool:
    for k, g in enumerate(G):
        if g is None or k == i or k == j:
            continue
        if divides(g[0][2], m):
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
    return False


def _mult(g: list, b: tuple, frame: Frame) -> list:
    nw = frame.nw
    sh = frame.shift(b)
    return [
        (tuple(x + y for x, y in zip(k[:nw], sh)) + k[nw:], comp, tuple(x + y for x, y in zip(e, b)), a)
        for k, comp, e, a in g
    ]


def _interreduce(G: list, frame: Frame, field: Field) -> list:
    G = sorted(G, key=lambda g: g[0][0])
    minimal = []
    for g in G:
        if not any(h[0][1] == g[0][1] and divides(h[0][2], g[0][2]) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        head, tail = g[:1], g[1:]
        r, _ = reduce_terms(tail, others, frame, field.p)
        out.append(make_monic(head + r, field))
    out.sort(key=lambda g: g[0][0], reverse=True)
    return out


# --- ideals of polynomials ----------------------------------------------------


class PolyIdeal:
    """Ideal of K[X1..Xn] generated by homogeneous polynomials."""

    def __init__(self, ctx: RingContext, gens: Iterable, order: TermOrder | None = None, *, homogeneous=True):
        polys = [f for f in polynomials_from(ctx, gens) if f]
        if homogeneous and not all(f.is_homogeneous() for f in polys):
            raise RingError("generators must be homogeneous")
        self.ctx = ctx
        self.gens = tuple(polys)
        self.order = order or TermOrder.degrevlex(ctx.n)

    @classmethod
    def from_monomial(cls, I: MonomialIdeal, field: Field = GF32003) -> "PolyIdeal":
        ctx = RingContext(I.n, field)
        return cls(ctx, [Polynomial.monomial(ctx, g) for g in I.gens])

    @property
    def n(self) -> int:
        return self.ctx.n

    def is_monomial(self) -> bool:
        return all(f.is_monomial() for f in self.gens)

    def as_monomial_ideal(self) -> MonomialIdeal:
        if not self.is_monomial():
            raise RingError("not a monomial ideal")
        return MonomialIdeal(self.n, [next(iter(f.terms)) for f in self.gens])

    @cached_property
    def groebner(self) -> "GroebnerBasis":
        return buchberger(self)

    def initial_ideal(self) -> MonomialIdeal:
        return self.groebner.initial_ideal

    @cached_property
    def hilbert_series(self) -> HilbertSeries:
        return hilbert_numerator(self.initial_ideal())

    @property
    def max_degree(self) -> int:
        return max((f.degree for f in self.gens), default=0)

    def __str__(self):
        return "ideal(" + ", ".join(str(f) for f in self.gens) + ")"

    def __repr__(self):
        return f"PolyIdeal(n={self.n}, {self.ctx.field}, {self})"


class GroebnerBasis:
    def __init__(self, ideal: PolyIdeal, polys: list):
        self.ideal = ideal
        self.order = ideal.order
        self.polys = polys

    @cached_property
    def leading_monomials(self) -> list:
        return [f.leading_monomial(self.order) for f in self.polys]

    @cached_property
    def initial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ideal.n, self.leading_monomials)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)


def buchberger(J: PolyIdeal) -> GroebnerBasis:
    frame = Frame.ideal(J.order, J.n)
    terms = groebner_terms((to_terms(f, frame) for f in J.gens), frame, J.ctx.field)
    return GroebnerBasis(J, [from_terms(J.ctx, t) for t in terms])


def initial_ideal(J) -> MonomialIdeal:
    if isinstance(J, MonomialIdeal):
        return J
    return J.initial_ideal()


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    frame = Frame.ideal(G.order, f.ctx.n)
    r, _ = reduce_terms(to_terms(f, frame), [to_terms(g, frame) for g in G.polys], frame, f.ctx.field.p)
    return from_terms(f.ctx, r)


def hilbert_function_linear_algebra(J: PolyIdeal, degrees: Iterable[int]) -> list:
    """dim_K (R/J)_d from the rank of the degree-d Macaulay matrix."""
    from .linalg import rank

    n, p = J.n, J.ctx.field.p
    out = []
    for d in degrees:
        if d < 0:
            out.append(0)
            continue
        mons = monomials_of_degree(n, d)
        idx = {u: i for i, u in enumerate(mons)}
        rows = []
        for f in J.gens:
            k = d - f.degree
            if k < 0:
                continue
            for m in monomials_of_degree(n, k):
                row = [0] * len(mons)
                for u, c in f.terms.items():
                    row[idx[tuple(a + b for a, b in zip(u, m))]] = c
                rows.append(row)
        r = rank(rows, p) if rows else 0
        out.append(len(mons) - r)
    return out


# --- generic initial ideals -----------------------------------------------------


def _as_poly_ideal(J, field: Field) -> PolyIdeal:
    if isinstance(J, MonomialIdeal):
        return PolyIdeal.from_monomial(J, field)
    return J


def _target_series(J) -> HilbertSeries:
    if isinstance(J, MonomialIdeal):
        return hilbert_numerator(J)
    return J.hilbert_series


def _revlex_initial_hilbert_driven(polys: list, n: int, p: int, target: HilbertSeries) -> MonomialIdeal:
    """Degree-by-degree echelon forms of the Macaulay matrices, stopping once
    the leading monomials found generate an ideal with the target series."""
    if not polys:
        return MonomialIdeal.zero(n)
    order = TermOrder.degrevlex(n)
    by_deg: dict = {}
    for f in polys:
        by_deg.setdefault(f.degree, []).append(f)
    d = min(by_deg)
    top = max(by_deg)
    lead: list = []
    basis = None
    prev_mons = None
    current = MonomialIdeal.zero(n)
    while True:
        mons = sorted(monomials_of_degree(n, d), key=order.key, reverse=True)
        idx = {u: i for i, u in enumerate(mons)}
        blocks = []
        if basis is not None and basis.shape[0]:
            for j in range(n):
                cols = np.fromiter((idx[u[:j] + (u[j] + 1,) + u[j + 1 :]] for u in prev_mons), dtype=np.int64)
                block = np.zeros((basis.shape[0], len(mons)), dtype=np.int64)
                block[:, cols] = basis
                blocks.append(block)
        gens_here = by_deg.get(d, [])
        if gens_here:
            block = np.zeros((len(gens_here), len(mons)), dtype=np.int64)
            for r, f in enumerate(gens_here):
                for u, c in f.terms.items():
                    block[r, idx[u]] = c
            blocks.append(block)
        want = comb(n - 1 + d, d) - target[d]
        if blocks:
            pivots, basis = echelon_mod_p(np.vstack(blocks), p, stop_rank=want)
        else:
            pivots, basis = [], np.zeros((0, len(mons)), dtype=np.int64)
        if len(pivots) != want:
            raise GinCertificationError([f"rank {len(pivots)} != {want} in degree {d}"])
        fresh = [mons[c] for c in pivots if mons[c] not in current]
        if fresh:
            lead.extend(fresh)
            current = MonomialIdeal(n, lead)
        prev_mons = mons
        if d >= top and hilbert_numerator(current) == target:
            return current
        d += 1


def _initial_after_change(J: PolyIdeal, g: LinearChange, target: HilbertSeries, engine: str) -> MonomialIdeal:
    moved = [g.apply(f) for f in J.gens]
    if engine == "linalg" and J.ctx.field.p:
        return _revlex_initial_hilbert_driven(moved, J.n, J.ctx.field.p, target)
    return PolyIdeal(J.ctx, moved).initial_ideal()


def rng_streams(seed, count: int):
    """Independent numpy generators derived from one master seed."""
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    return [np.random.default_rng(s) for s in ss.spawn(count)]


def gin(J, trials: int = 2, seed=0, field: Field = GF32003, engine: str = "linalg") -> MonomialIdeal:
    """Generic initial ideal for degrevlex, certified by agreement of
    ``trials`` independent random coordinate changes."""
    if trials < 1:
        raise ValueError("need at least one trial")
    P = _as_poly_ideal(J, field)
    if not P.gens:
        return MonomialIdeal.zero(P.n)
    target = _target_series(J)
    results = []
    for rng in rng_streams(seed, trials):
        g = LinearChange.random(P.ctx, rng)
        results.append(_initial_after_change(P, g, target, engine))
    if any(r != results[0] for r in results[1:]):
        raise GinCertificationError(results)
    return results[0]


def specialize_generic(J, seed=0, field: Field = GF32003) -> PolyIdeal:
    """Image of J under X_n -> a_1 X_1 + ... + a_{n-1} X_{n-1}, random a_i."""
    P = _as_poly_ideal(J, field)
    if P.n < 2:
        raise RingError("need at least two variables")
    (rng,) = rng_streams(seed, 1)
    a = [P.ctx.field.random_element(rng) for _ in range(P.n - 1)]
    return specialize_with(P, a)


def specialize_with(P: PolyIdeal, coeffs: Sequence) -> PolyIdeal:
    images = [specialize_last(f, coeffs) for f in P.gens]
    return PolyIdeal(P.ctx.sub(P.n - 1), [f for f in images if f])


def gin_restriction_identity_check(J, seed=0, trials: int = 2, field: Field = GF32003) -> bool:
    """Gin(g_n(J)) == Gin(J)_[n-1]."""
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    base, spec_seed, sub_seed = root.spawn(3)
    lhs = gin(specialize_generic(J, spec_seed, field), trials=trials, seed=sub_seed, field=field)
    rhs = restrict(gin(J, trials=trials, seed=base, field=field), J.n - 1)
    return lhs == rhs


# --- saturation of polynomial ideals ------------------------------------------


def _permute(f: Polynomial, perm: Sequence[int], ctx: RingContext) -> Polynomial:
    return Polynomial(ctx, {tuple(u[perm[i]] for i in range(len(u))): c for u, c in f.terms.items()}, _clean=True)


def colon_var_sat_poly(J: PolyIdeal, i: int) -> PolyIdeal:
    """J : X_i^infinity, by moving X_i last and dividing a degrevlex basis by
    the largest power of the last variable."""
    n = J.n
    perm = list(range(n))
    perm[i - 1], perm[n - 1] = perm[n - 1], perm[i - 1]
    moved = PolyIdeal(J.ctx, [_permute(f, perm, J.ctx) for f in J.gens])
    out = []
    for g in moved.groebner:
        k = min(u[-1] for u in g.terms)
        stripped = Polynomial(J.ctx, {u[:-1] + (u[-1] - k,): c for u, c in g.terms.items()}, _clean=True)
        out.append(_permute(stripped, perm, J.ctx))
    return PolyIdeal(J.ctx, out)


def intersect_poly(A: PolyIdeal, B: PolyIdeal) -> PolyIdeal:
    """A cap B = (y A + (1 - y) B) cap R, eliminating a new variable y."""
    n = A.n
    big = RingContext(n + 1, A.ctx.field)
    weights = [[1] + [0] * n, [0] + [1] * n]
    for i in range(n, 1, -1):
        weights.append([0] + [-int(j == i - 1) for j in range(n)])
    order = TermOrder("elim", weights)
    y = Polynomial.variable(big, 1)

    def lift(f):
        return Polynomial(big, {(0,) + u: c for u, c in f.terms.items()}, _clean=True)

    gens = [y * lift(f) for f in A.gens] + [(1 - y) * lift(f) for f in B.gens]
    frame = Frame.ideal(order, n + 1)
    G = groebner_terms((to_terms(f, frame) for f in gens), frame, big.field)
    kept = [from_terms(big, g) for g in G if all(t[2][0] == 0 for t in g)]
    return PolyIdeal(A.ctx, [Polynomial(A.ctx, {u[1:]: c for u, c in f.terms.items()}, _clean=True) for f in kept])


def saturate_poly(J: PolyIdeal) -> PolyIdeal:
    """J : m^infinity as the intersection of the J : X_i^infinity."""
    if not J.gens:
        return J
    result = colon_var_sat_poly(J, 1)
    for i in range(2, J.n + 1):
        result = intersect_poly(result, colon_var_sat_poly(J, i))
    return result


def saturate(J, field: Field = GF32003):
    """Saturation of a monomial or polynomial ideal."""
    from .monomial_ideal import saturate_m

    if isinstance(J, MonomialIdeal):
        return saturate_m(J)
    return saturate_poly(J)


def hilbert_series_of(J) -> HilbertSeries:
    if isinstance(J, MonomialIdeal):
        return hilbert_numerator(J)
    return J.hilbert_series


__all__ = [
    "Frame",
    "GinCertificationError",
    "GroebnerBasis",
    "PolyIdeal",
    "buchberger",
    "colon_var_sat_poly",
    "gin",
    "gin_restriction_identity_check",
    "hilbert_function_linear_algebra",
    "hilbert_series_of",
    "initial_ideal",
    "intersect_poly",
    "normal_form",
    "rng_streams",
    "saturate",
    "saturate_poly",
    "specialize_generic",
    "specialize_with",
]
