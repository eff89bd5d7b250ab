"""Hilbert functions of local cohomology modules H^k_m(R/I).

Two independent routes produce a :class:`CohomologyTable`:

* ``layers``: for sequentially Cohen-Macaulay R/I the k-th row is the
  Hilbert series of the unmixed layer U_k, twisted by (-1)^k and expanded
  in descending powers of t;
* ``ext``: local duality, h^k_j = dim Ext^{n-k}(R/I, R)_{-n-j}.  Monomial
  ideals go through the multigraded Taylor complex, which gives every row
  in closed form; other ideals go through a Schreyer resolution and give
  values on a finite window only.

Rows in closed form are :class:`RationalRow` objects: N(s) / (1 - s)^f with
s = 1/t and N a Laurent polynomial, so that h_j is the coefficient of s^-j.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import config
from .groebner import PolyIdeal
from .hilbert import HilbertSeries, divide_one_minus_t, format_tpoly, hilbert_numerator, one_minus_t_power
from .linalg import echelon_mod_p, rank_rational
from .monomial_ideal import MonomialIdeal, dimension, filtration_ideal, is_weakly_stable
from .resolution import schreyer_resolution
from .ring import GF32003, Field, RingError, lcm


class CohomologyError(RuntimeError):
    pass


class CancellationError(CohomologyError):
    """No consecutive-cancellation witness exists for a pair of tables."""

    def __init__(self, j, e):
        self.j, self.e = j, e
        super().__init__(f"no consecutive cancellation in degree {j}: recurrence gives {e}")


class CriteriaDisagreement(CohomologyError):
    """The two i-sCM criteria gave different answers."""


# --- rational rows ---------------------------------------------------------------


def _laurent_trim(N: dict) -> dict:
    return {q: c for q, c in N.items() if c}


def _laurent_mul(A: dict, B: dict) -> dict:
    out: dict = {}
    for a, x in A.items():
        for b, y in B.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return _laurent_trim(out)


def _laurent_add(A: dict, B: dict, scale: int = 1) -> dict:
    out = dict(A)
    for q, c in B.items():
        out[q] = out.get(q, 0) + scale * c
    return _laurent_trim(out)


def _from_list(coeffs: Sequence[int], shift: int = 0) -> dict:
    return _laurent_trim({i + shift: c for i, c in enumerate(coeffs)})


class RationalRow:
    """h_j = coefficient of s^(-j) in num(s) / (1 - s)^pole, expanded at s = 0."""

    __slots__ = ("num", "pole")

    def __init__(self, num: dict, pole: int):
        num = _laurent_trim(num)
        while pole > 0 and num and sum(num.values()) == 0:
            lo = min(num)
            coeffs = [num.get(q, 0) for q in range(lo, max(num) + 1)]
            num = _from_list(divide_one_minus_t(coeffs), lo)
            pole -= 1
        self.num = num
        self.pole = pole if num else 0

    @classmethod
    def zero(cls) -> "RationalRow":
        return cls({}, 0)

    @classmethod
    def from_hilbert(cls, H: HilbertSeries, sign: int = 1) -> "RationalRow":
        """sign * H(t) re-expanded in descending powers of t."""
        h, d = H.reduced
        if d < 0:
            return cls.zero()
        # N(t)/(1-t)^d at t = 1/s is (-1)^d s^d N(1/s) / (1-s)^d
        sgn = sign * (-1) ** d
        return cls({d - i: sgn * c for i, c in enumerate(h)}, d)

    def is_zero(self) -> bool:
        return not self.num

    def __call__(self, j: int) -> int:
        q = -j
        if self.pole == 0:
            return self.num.get(q, 0)
        f = self.pole
        return sum(c * comb(q - a + f - 1, f - 1) for a, c in self.num.items() if a <= q)

    def values(self, js: Iterable[int]) -> dict:
        return {j: self(j) for j in js}

    def top_degree(self):
        """Largest j with h_j != 0, or None for the zero row."""
        return -min(self.num) if self.num else None

    def __eq__(self, other):
        if not isinstance(other, RationalRow):
            return NotImplemented
        return self.pole == other.pole and self.num == other.num

    def __hash__(self):
        return hash((self.pole, tuple(sorted(self.num.items()))))

    def to_json(self) -> dict:
        return {"numerator": {str(q): c for q, c in sorted(self.num.items())}, "pole": self.pole}

    def __str__(self):
        if not self.num:
            return "0"
        terms = " ".join(f"{c:+d}*s^{q}" for q, c in sorted(self.num.items()))
        return f"({terms}) / (1-s)^{self.pole}"

    def __repr__(self):
        return f"RationalRow({self})"


# --- tables ------------------------------------------------------------------------


@dataclass
class CohomologyTable:
    """Local cohomology Hilbert functions of R/I, rows k = 0..n.

    ``rows[k]`` is a RationalRow when the route gives closed forms;
    otherwise ``values[(k, j)]`` holds the window entries.
    """

    n: int
    window: tuple
    route: str
    rows: dict = dc_field(default_factory=dict)
    values: dict = dc_field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return len(self.rows) == self.n + 1

    def h(self, k: int, j: int) -> int:
        if k < 0 or k > self.n:
            return 0
        if k in self.rows:
            return self.rows[k](j)
        if (k, j) in self.values:
            return self.values[(k, j)]
        raise KeyError(f"h^{k}_{j} lies outside the window {self.window}")

    def js(self) -> range:
        return range(self.window[0], self.window[1] + 1)

    def row_values(self, k: int, window=None) -> dict:
        a, b = window or self.window
        return {j: self.h(k, j) for j in range(a, b + 1)}

    def row_is_zero(self, k: int) -> bool:
        if k in self.rows:
            return self.rows[k].is_zero()
        return not any(self.h(k, j) for j in self.js())

    def with_window(self, window) -> "CohomologyTable":
        """Same table on another window; closed-form tables only."""
        if not self.exact:
            a, b = window
            if a < self.window[0] or b > self.window[1]:
                raise CohomologyError("window table cannot be widened")
        return CohomologyTable(self.n, tuple(window), self.route, self.rows, self.values)

    def to_dict(self) -> dict:
        out = {
            "window": list(self.window),
            "rows": {str(k): {str(j): self.h(k, j) for j in self.js()} for k in range(self.n + 1)},
            "route": self.route,
        }
        if self.exact:
            out["closed_forms"] = {str(k): r.to_json() for k, r in self.rows.items()}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        lines = ["k,j,h"]
        for k in range(self.n + 1):
            for j in self.js():
                lines.append(f"{k},{j},{self.h(k, j)}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        js = list(self.js())
        width = max(3, max(len(str(j)) for j in js))
        head = "k\\j " + " ".join(f"{j:>{width}}" for j in js)
        lines = [head]
        for k in range(self.n + 1):
            lines.append(f"{k:<3} " + " ".join(f"{self.h(k, j):>{width}}" for j in js))
        return "\n".join(lines)


def rows_equal(A: CohomologyTable, B: CohomologyTable, k: int, window=None) -> bool:
    """Row k of A equals row k of B; exact when both rows are closed forms."""
    if k in A.rows and k in B.rows:
        return A.rows[k] == B.rows[k]
    w = window or _common_window(A, B)
    return A.row_values(k, w) == B.row_values(k, w)


def first_difference(A: CohomologyTable, B: CohomologyTable, ks: Iterable[int], window=None):
    """(k, j) of some differing entry, or None."""
    for k in ks:
        if rows_equal(A, B, k, window):
            continue
        w = window or _common_window(A, B)
        for j in range(w[0], w[1] + 1):
            if A.h(k, j) != B.h(k, j):
                return (k, j)
        return (k, None)
    return None


def tables_leq(A: CohomologyTable, B: CohomologyTable, window=None):
    """First (k, j) with A > B on the window, or None."""
    w = window or _common_window(A, B)
    for k in range(A.n + 1):
        for j in range(w[0], w[1] + 1):
            if A.h(k, j) > B.h(k, j):
                return (k, j)
    return None


def _common_window(A: CohomologyTable, B: CohomologyTable) -> tuple:
    wins = [t.window for t in (A, B) if not t.exact]
    if not wins:
        return (min(A.window[0], B.window[0]), max(A.window[1], B.window[1]))
    return (max(w[0] for w in wins), min(w[1] for w in wins))


# --- unmixed layers and BW polynomials --------------------------------------------


def _series(I) -> HilbertSeries:
    if isinstance(I, MonomialIdeal):
        return hilbert_numerator(I)
    return I.hilbert_series


def layer_hilbert(I: MonomialIdeal) -> list:
    """[Hilb(U_0), ..., Hilb(U_d)] with U_k = I^<k> / I^<k-1>."""
    if I.is_unit():
        raise RingError("the unit ideal has no unmixed layers")
    d = dimension(I)
    out = []
    prev = hilbert_numerator(I)
    for k in range(d + 1):
        cur = hilbert_numerator(filtration_ideal(I, k))
        out.append(prev - cur)
        prev = cur
    for k, H in enumerate(out):
        if H.dimension not in (-1, k):
            raise AssertionError(f"layer U_{k} has dimension {H.dimension}")
    return out


@dataclass(frozen=True)
class BWPolynomial:
    """sum_k h(U_k; t) w^k, stored as {(k, t-degree): coefficient}."""

    coefficients: tuple  # sorted ((k, d), c) pairs

    @classmethod
    def from_layers(cls, layers: Sequence[HilbertSeries]) -> "BWPolynomial":
        coeffs = {}
        for k, H in enumerate(layers):
            h, d = H.reduced
            if d < 0:
                continue
            for e, c in enumerate(h):
                if c:
                    coeffs[(k, e)] = c
        return cls(tuple(sorted(coeffs.items())))

    def as_dict(self) -> dict:
        return dict(self.coefficients)

    def layer(self, k: int) -> list:
        d = self.as_dict()
        top = max((e for kk, e in d if kk == k), default=-1)
        return [d.get((k, e), 0) for e in range(top + 1)]

    def truncated(self, i: int) -> "BWPolynomial":
        return BWPolynomial(tuple((key, c) for key, c in self.coefficients if key[0] >= i))

    def telescoped(self, n: int) -> HilbertSeries:
        """sum_k h(U_k; t) / (1 - t)^k over the common denominator (1 - t)^n."""
        from .hilbert import poly_add, poly_mul

        total: list = []
        for k in sorted({k for (k, _), _ in self.coefficients}):
            total = poly_add(total, poly_mul(self.layer(k), one_minus_t_power(n - k)))
        return HilbertSeries(total, n)

    def __str__(self):
        ks = sorted({k for (k, _), _ in self.coefficients})
        if not ks:
            return "0"
        parts = []
        for k in ks:
            p = format_tpoly(self.layer(k))
            w = "" if k == 0 else ("w" if k == 1 else f"w^{k}")
            if not w:
                parts.append(p)
            elif p == "1":
                parts.append(w)
            elif p.lstrip("-").replace("*", "").isalnum() and " " not in p:
                parts.append(f"{p}*{w}")
            else:
                parts.append(f"({p})*{w}")
        return " + ".join(parts)


def bw_polynomial(I: MonomialIdeal) -> BWPolynomial:
    return BWPolynomial.from_layers(layer_hilbert(I))


def truncated_bw(I: MonomialIdeal, i: int) -> BWPolynomial:
    return bw_polynomial(I).truncated(i)


# --- layer route -------------------------------------------------------------------


def cohomology_layers(I: MonomialIdeal, window=None) -> CohomologyTable:
    """Closed-form table assuming R/I is sequentially Cohen-Macaulay."""
    n = I.n
    rows = {k: RationalRow.zero() for k in range(n + 1)}
    if not I.is_unit():
        for k, H in enumerate(layer_hilbert(I)):
            rows[k] = RationalRow.from_hilbert(H, (-1) ** k)
    return CohomologyTable(n, tuple(window or default_window(I)), "layers", rows)


# --- ext route: multigraded Taylor complex ------------------------------------------


def _filter_cohomology(r: int, constraints: tuple, p: int) -> tuple:
    """Cohomology dims of the cochain complex on {sigma : sigma meets every
    mask in constraints}, graded by |sigma|, with the Taylor dual signs."""
    return _filter_cohomology_cached(r, constraints, p)


@lru_cache(maxsize=200_000)
def _filter_cohomology_cached(r: int, constraints: tuple, p: int) -> tuple:
    members: list = [[] for _ in range(r + 1)]
    for sigma in range(1 << r):
        if all(sigma & S for S in constraints):
            members[bin(sigma).count("1")].append(sigma)
    sizes = [len(m) for m in members]
    ranks = [0] * (r + 1)  # ranks[i] = rank of delta: C^i -> C^{i+1}
    for i in range(r):
        if not sizes[i] or not sizes[i + 1]:
            continue
        pos = {s: c for c, s in enumerate(members[i + 1])}
        M = np.zeros((sizes[i], sizes[i + 1]), dtype=np.int64)
        for row, sigma in enumerate(members[i]):
            below = 0
            for g in range(r):
                bit = 1 << g
                if sigma & bit:
                    below += 1
                    continue
                c = pos.get(sigma | bit)
                if c is not None:
                    M[row, c] = 1 if below % 2 == 0 else -1
        if p:
            ranks[i] = len(echelon_mod_p(M, p)[0])
        else:
            ranks[i] = rank_rational(M.tolist())
    return tuple(sizes[i] - ranks[i] - (ranks[i - 1] if i else 0) for i in range(r + 1))


def _normalize_constraints(masks) -> tuple:
    masks = set(masks)
    # a constraint implied by a smaller one is redundant
    keep = [S for S in masks if not any(T != S and T & S == T for T in masks)]
    return tuple(sorted(keep))


def ext_series_taylor(I: MonomialIdeal, field: Field = GF32003) -> list:
    """Hilbert series of Ext^i(R/I, R) for i = 0..n as (numerator dict, n):
    sum_e dim Ext^i_e u^e = numerator(u) / (1 - u)^n."""
    n, gens = I.n, I.gens
    r = len(gens)
    if r > config.max_gens():
        raise CohomologyError(f"{r} generators exceed the Taylor cap {config.max_gens()}")
    classes = []
    for c in range(n):
        exps = sorted({g[c] for g in gens if g[c]})
        opts = [("free", None, {0: 1})]
        lo = 0
        for e in exps:
            mask = sum(1 << k for k, g in enumerate(gens) if g[c] >= e)
            opts.append(("cut", mask, {-v: 1 for v in range(lo + 1, e + 1)}))
            lo = e
        classes.append(opts)
    total = [dict() for _ in range(r + 1)]
    p = field.p
    for choice in product(*classes):
        masks = _normalize_constraints(m for kind, m, _ in choice if kind == "cut")
        dims = _filter_cohomology(r, masks, p)
        if not any(dims):
            continue
        nfree = sum(1 for kind, _, _ in choice if kind == "free")
        term = _from_list(one_minus_t_power(n - nfree))
        for kind, _, L in choice:
            if kind == "cut":
                term = _laurent_mul(term, L)
        for i, dim in enumerate(dims):
            if dim:
                total[i] = _laurent_add(total[i], term, dim)
    return total[: n + 1] + [dict()] * max(0, n + 1 - len(total))


def _ext_table_taylor(I: MonomialIdeal, window, field: Field) -> CohomologyTable:
    n = I.n
    series = ext_series_taylor(I, field)
    rows = {}
    for k in range(n + 1):
        i = n - k
        num = series[i] if i < len(series) else {}
        # h^k(s) = s^n Ext^{n-k}(s)
        rows[k] = RationalRow({q + n: c for q, c in num.items()}, n)
    return CohomologyTable(n, tuple(window), "ext", rows)


def _ext_table_resolution(J, window, field: Field) -> CohomologyTable:
    res = schreyer_resolution(J, field)
    n = res.n
    values = {}
    for j in range(window[0], window[1] + 1):
        ext = res.ext_dims(-n - j)
        for k in range(n + 1):
            i = n - k
            values[(k, j)] = ext[i] if i < len(ext) else 0
    return CohomologyTable(n, tuple(window), "ext", {}, values)


def cohomology_ext(I, window=None, field: Field | None = None) -> CohomologyTable:
    """Table from local duality; closed form for monomial ideals within the
    Taylor cap, window values otherwise."""
    I = as_ideal(I)
    if field is None:
        field = I.ctx.field if isinstance(I, PolyIdeal) else GF32003
    window = tuple(window or default_window(I))
    n = I.n
    if _is_unit(I):
        return CohomologyTable(n, window, "ext", {k: RationalRow.zero() for k in range(n + 1)})
    if isinstance(I, MonomialIdeal):
        if len(I.gens) <= config.max_gens():
            return _ext_table_taylor(I, window, field)
        return _ext_table_resolution(I, window, field)
    return _ext_table_resolution(I, window, field)


def as_ideal(I):
    """Monomial ideals given as PolyIdeal become MonomialIdeal."""
    if isinstance(I, PolyIdeal) and I.is_monomial():
        return I.as_monomial_ideal()
    return I


def _is_unit(I) -> bool:
    if isinstance(I, MonomialIdeal):
        return I.is_unit()
    return I.initial_ideal().is_unit()


# --- route choice and windows --------------------------------------------------


def _lcm_degree(I) -> int:
    gens = I.gens if isinstance(I, MonomialIdeal) else I.initial_ideal().gens
    if not gens:
        return 0
    u = gens[0]
    for g in gens[1:]:
        u = lcm(u, g)
    return sum(u)


def _max_degree(I) -> int:
    if isinstance(I, MonomialIdeal):
        return I.max_degree
    return max(I.max_degree, I.initial_ideal().max_degree)


def default_window(I, *companions) -> tuple:
    """[-(D + n + 2), D + 2] with D the largest generator degree among I and
    its companions (Gin, lex) and the top twist of I's Taylor-type frame."""
    I = as_ideal(I)
    D = max([_max_degree(I), _lcm_degree(I)] + [_max_degree(as_ideal(c)) for c in companions])
    n = I.n
    return (-(D + n + 2), D + 2)


def union_window(*windows) -> tuple:
    return (min(w[0] for w in windows), max(w[1] for w in windows))


def cohomology_table(I, window=None, field: Field | None = None) -> CohomologyTable:
    """Layers for weakly stable ideals, the ext route otherwise."""
    I = as_ideal(I)
    if isinstance(I, MonomialIdeal) and is_weakly_stable(I):
        return cohomology_layers(I, window)
    return cohomology_ext(I, window, field)


# --- derived checks ---------------------------------------------------------------


def depth_and_dim(table: CohomologyTable) -> tuple:
    nonzero = [k for k in range(table.n + 1) if not table.row_is_zero(k)]
    if not nonzero:
        raise CohomologyError("all rows vanish on the window (R/I = 0 or window too small)")
    return nonzero[0], nonzero[-1]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    detail: object = None

    def __bool__(self):
        return self.ok


def serre_check(I, window=None, table: CohomologyTable | None = None) -> Verdict:
    """sum_k (-1)^k h^k_j = H(j) - P(j) on the window."""
    I = as_ideal(I)
    table = table or cohomology_table(I, window)
    H = _series(I)
    P = H.polynomial
    a, b = window or table.window
    for j in range(a, b + 1):
        lhs = sum((-1) ** k * table.h(k, j) for k in range(table.n + 1))
        rhs = H[j] - P(j)
        if lhs != rhs:
            return Verdict(False, j)
    return Verdict(True)


@dataclass(frozen=True)
class CancellationWitness:
    window: tuple
    e: dict  # j -> (e_0, ..., e_{n+1})

    def is_trivial(self) -> bool:
        return not any(any(v) for v in self.e.values())


def cancellation_witness(A: CohomologyTable, B: CohomologyTable, window=None) -> CancellationWitness:
    """Solve d_k = e_k + e_{k+1}, e_0 = 0 = e_{n+1}, e >= 0, for d = B - A."""
    w = tuple(window or _common_window(A, B))
    n = max(A.n, B.n)
    out = {}
    for j in range(w[0], w[1] + 1):
        d = [B.h(k, j) - A.h(k, j) for k in range(n + 1)]
        e = [0]
        for k in range(n + 1):
            e.append(d[k] - e[-1])
        if min(e) < 0 or e[-1] != 0:
            raise CancellationError(j, e)
        out[j] = tuple(e)
    return CancellationWitness(w, out)


def layer_criterion(I: MonomialIdeal, G: MonomialIdeal, i: int) -> bool:
    """Hilb(U_k(R/I)) = Hilb(U_k(R/G)) for all k >= i."""
    A, B = layer_hilbert(I), layer_hilbert(G)
    top = max(len(A), len(B))
    A = A + [None] * (top - len(A))
    B = B + [None] * (top - len(B))
    for k in range(max(i, 0), top):
        a = A[k] if A[k] is not None else HilbertSeries((), I.n)
        b = B[k] if B[k] is not None else HilbertSeries((), I.n)
        if a != b:
            return False
    return True


def table_criterion(T: CohomologyTable, TG: CohomologyTable, i: int, window=None) -> bool:
    return all(rows_equal(T, TG, k, window) for k in range(max(i, 0), T.n + 1))


def is_i_scm(I, i: int, gin_ideal: MonomialIdeal | None = None, seed=0, table=None, window=None) -> bool:
    """R/I is i-sCM, by comparing rows k >= i of the tables of I and Gin(I).

    For monomial I the layer-Hilbert criterion is evaluated as well and must
    agree.
    """
    from .groebner import gin

    I = as_ideal(I)
    if _is_unit(I):
        return True
    G = gin_ideal if gin_ideal is not None else gin(I, seed=seed)
    T = table if table is not None else cohomology_ext(I, window or default_window(I, G))
    TG = cohomology_layers(G, T.window)
    by_table = table_criterion(T, TG, i, window)
    if isinstance(I, MonomialIdeal):
        by_layers = layer_criterion(I, G, i)
        if by_layers != by_table:
            raise CriteriaDisagreement(f"{I}, i={i}: table criterion {by_table}, layer criterion {by_layers}")
    return by_table


def is_scm(I, **kw) -> bool:
    return is_i_scm(I, 0, **kw)


__all__ = [
    "BWPolynomial",
    "CancellationError",
    "CancellationWitness",
    "CohomologyError",
    "CohomologyTable",
    "CriteriaDisagreement",
    "RationalRow",
    "Verdict",
    "as_ideal",
    "bw_polynomial",
    "cancellation_witness",
    "cohomology_ext",
    "cohomology_layers",
    "cohomology_table",
    "default_window",
    "depth_and_dim",
    "ext_series_taylor",
    "first_difference",
    "is_i_scm",
    "is_scm",
    "layer_criterion",
    "layer_hilbert",
    "rows_equal",
    "serre_check",
    "table_criterion",
    "tables_leq",
    "truncated_bw",
    "union_window",
]
