"""Graded free resolutions: Taylor (monomial ideals) and Schreyer (any ideal).

A resolution of R/I is stored as twist lists ``degrees[k]`` for F_k and
differentials ``maps[k]``: F_k -> F_{k-1} given column-wise,
``maps[k][col] = {row: {exponent: coeff}}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Sequence

from .groebner import Frame, PolyIdeal, groebner_terms, reduce_terms, sub_mul, to_terms
from .hilbert import HilbertSeries, poly_add, poly_shift
from .linalg import rank
from .monomial_ideal import MonomialIdeal
from .ring import GF32003, Field, RingError, TermOrder, divides, lcm, monomials_of_degree


@dataclass
class FreeResolution:
    n: int
    field: Field
    degrees: list  # degrees[k]: twists of the basis of F_k
    maps: list = dc_field(default_factory=list)  # maps[k] for k >= 1; maps[0] unused

    @property
    def length(self) -> int:
        return len(self.degrees) - 1

    def ranks(self) -> list:
        return [len(d) for d in self.degrees]

    def numerator(self) -> list:
        """sum_k (-1)^k sum_j t^{a_kj}, the Hilbert numerator of R/I."""
        out: list = []
        for k, ds in enumerate(self.degrees):
            for a in ds:
                out = poly_add(out, poly_shift([(-1) ** k], a))
        return out

    def hilbert_series(self) -> HilbertSeries:
        return HilbertSeries(self.numerator(), self.n)

    def check_homogeneous(self) -> bool:
        for k in range(1, len(self.degrees)):
            for col, entries in enumerate(self.maps[k]):
                for row, poly in entries.items():
                    for u in poly:
                        if sum(u) + self.degrees[k - 1][row] != self.degrees[k][col]:
                            return False
        return True

    def check_composition(self) -> bool:
        """d_{k-1} d_k = 0 for all k."""
        p = self.field.p
        for k in range(2, len(self.degrees)):
            for entries in self.maps[k]:
                total: dict = {}
                for mid, a in entries.items():
                    for row, b in self.maps[k - 1][mid].items():
                        acc = total.setdefault(row, {})
                        for u, c in a.items():
                            for v, e in b.items():
                                w = tuple(x + y for x, y in zip(u, v))
                                acc[w] = acc.get(w, 0) + c * e
                for acc in total.values():
                    if any((c % p if p else c) for c in acc.values()):
                        return False
        return True

    # -- per-degree linear algebra
    def _basis(self, k: int, e: int, dual: bool) -> list:
        """Pairs (l, mu) spanning (F_k)_e, or (F_k^*)_e when dual."""
        out = []
        for l, a in enumerate(self.degrees[k]):
            d = e + a if dual else e - a
            if d >= 0:
                out.extend((l, mu) for mu in monomials_of_degree(self.n, d))
        return out

    def _matrix(self, k: int, e: int, dual: bool) -> list:
        """Matrix of d_k in degree e (rows = source basis), or of its dual
        F_{k-1}^* -> F_k^* in degree e."""
        p = self.field.p
        if dual:
            src = self._basis(k - 1, e, True)
            tgt = self._basis(k, e, True)
        else:
            src = self._basis(k, e, False)
            tgt = self._basis(k - 1, e, False)
        index = {b: i for i, b in enumerate(tgt)}
        rows = []
        if dual:
            # (l, mu) -> sum_m d_k[l, m] x^mu e_m^*
            by_row: dict = {}
            for m, entries in enumerate(self.maps[k]):
                for l, poly in entries.items():
                    by_row.setdefault(l, []).append((m, poly))
            for l, mu in src:
                r = [0] * len(tgt)
                for m, poly in by_row.get(l, ()):
                    for u, c in poly.items():
                        key = (m, tuple(x + y for x, y in zip(u, mu)))
                        r[index[key]] += c
                rows.append([x % p for x in r] if p else r)
        else:
            for m, mu in src:
                r = [0] * len(tgt)
                for l, poly in self.maps[k][m].items():
                    for u, c in poly.items():
                        r[index[(l, tuple(x + y for x, y in zip(u, mu)))]] += c
                rows.append([x % p for x in r] if p else r)
        return rows, len(src), len(tgt)

    def _rank(self, k: int, e: int, dual: bool) -> int:
        if k < 1 or k > self.length:
            return 0
        rows, s, t = self._matrix(k, e, dual)
        if not s or not t:
            return 0
        return rank(rows, self.field.p)

    def homology_dims(self, e: int) -> list:
        """dim H_k(F)_e for k = 0..length; exactness means only H_0 survives."""
        out = []
        for k in range(self.length + 1):
            dim = len(self._basis(k, e, False))
            out.append(dim - self._rank(k, e, False) - self._rank(k + 1, e, False))
        return out

    def ext_dims(self, e: int) -> list:
        """dim Ext^k(R/I, R)_e for k = 0..length."""
        out = []
        for k in range(self.length + 1):
            dim = len(self._basis(k, e, True))
            out.append(dim - self._rank(k + 1, e, True) - self._rank(k, e, True))
        return out


def check_exactness(res: FreeResolution, degrees: Sequence[int], quotient_hf=None) -> bool:
    """Spot check: H_k = 0 for k >= 1 and, if given, H_0 matches R/I."""
    for e in degrees:
        h = res.homology_dims(e)
        if any(h[1:]):
            return False
        if quotient_hf is not None and h[0] != quotient_hf(e):
            return False
    return True


# --- Taylor ------------------------------------------------------------------


def taylor_resolution(I: MonomialIdeal, field: Field = GF32003) -> FreeResolution:
    gens = I.gens
    n = I.n
    if I.is_unit():
        raise RingError("R/(1) = 0 has the empty resolution")
    p = field.p
    subsets = [[()]]
    for k in range(1, len(gens) + 1):
        subsets.append(list(combinations(range(len(gens)), k)))
    lcms = {(): (0,) * n}
    for level in subsets[1:]:
        for s in level:
            lcms[s] = lcm(lcms[s[:-1]], gens[s[-1]])
    degrees = [[sum(lcms[s]) for s in level] for level in subsets]
    maps: list = [None]
    for k in range(1, len(subsets)):
        pos = {s: i for i, s in enumerate(subsets[k - 1])}
        cols = []
        for s in subsets[k]:
            col = {}
            for r in range(len(s)):
                face = s[:r] + s[r + 1 :]
                u = tuple(a - b for a, b in zip(lcms[s], lcms[face]))
                c = (-1) ** r
                col[pos[face]] = {u: c % p if p else c}
            cols.append(col)
        maps.append(cols)
    return FreeResolution(n, field, degrees, maps)


# --- Schreyer -----------------------------------------------------------------


def schreyer_resolution(J, field: Field = GF32003, minimal: bool = True) -> FreeResolution:
    """Resolution of R/J from iterated Schreyer syzygies of a degrevlex basis.

    Each level is sorted by decreasing exponent of the next variable, which
    makes the leading terms of the next level avoid one more variable, so the
    process stops after at most n + 1 steps.
    """
    if isinstance(J, MonomialIdeal):
        J = PolyIdeal.from_monomial(J, field)
    n = J.n
    field = J.ctx.field
    p = field.p
    order = TermOrder.degrevlex(n)
    frame = Frame.ideal(order, n)
    G = [list(g) for g in groebner_terms((to_terms(f, frame) for f in J.gens), frame, field)]
    if not G:
        return FreeResolution(n, field, [[0]], [None])
    if any(sum(g[0][2]) == 0 for g in G):
        raise RingError("R/(1) = 0 has the empty resolution")

    degrees = [[0]]
    maps: list = [None]
    elems = G  # vectors of F_{k-1}, each a term list in `frame`
    level = 1
    while elems:
        var_i = min(level, n) - 1
        elems = _sort_level(elems, var_i)
        # the new free module F_k with induced order
        offsets = [tuple(a + b for a, b in zip(g[0][2], frame.offsets[g[0][1]])) for g in elems]
        ties = [frame.ties[g[0][1]] + (-m,) for m, g in enumerate(elems)]
        new_frame = Frame(order, offsets, ties)
        degrees.append([sum(o) for o in offsets])
        maps.append([_column(g) for g in elems])
        elems = _syzygies(elems, frame, new_frame, p)
        frame = new_frame
        level += 1
    res = FreeResolution(n, field, degrees, maps)
    return minimize(res) if minimal else res


def _sort_level(elems: list, i: int) -> list:
    # stable, so ties keep their previous relative order
    return sorted(elems, key=lambda g: (g[0][1], -g[0][2][i]))


def _column(g: list) -> dict:
    col: dict = {}
    for _, comp, exp, c in g:
        col.setdefault(comp, {})[exp] = c
    return col


def _syzygies(elems: list, frame: Frame, new_frame: Frame, p: int) -> list:
    """Pruned Schreyer syzygies of ``elems`` as term lists in ``new_frame``."""
    by_comp: dict = {}
    for k, g in enumerate(elems):
        by_comp.setdefault(g[0][1], []).append(k)
    found = []
    for comp, idx in by_comp.items():
        for x, a in enumerate(idx):
            for b in idx[x + 1 :]:
                ua, ub = elems[a][0][2], elems[b][0][2]
                m = lcm(ua, ub)
                qa = tuple(s - t for s, t in zip(m, ua))
                qb = tuple(s - t for s, t in zip(m, ub))
                spair = sub_mul(_shifted(elems[a], qa, frame), 1, qb, elems[b], frame, p)
                rem, quots = reduce_terms(spair, elems, frame, p, record=True)
                if rem:
                    raise AssertionError("S-pair did not reduce to zero: not a Groebner basis")
                terms: dict = {(a, qa): 1, (b, qb): -1}
                for k, q in enumerate(quots):
                    for mono, c in q:
                        terms[(k, mono)] = terms.get((k, mono), 0) - c
                vec = [
                    (new_frame.key(k, mono), k, mono, c % p if p else c)
                    for (k, mono), c in terms.items()
                    if (c % p if p else c)
                ]
                vec.sort(key=lambda t: t[0], reverse=True)
                if vec[0][1] != a or vec[0][2] != qa:
                    raise AssertionError("unexpected leading term of a Schreyer syzygy")
                found.append(vec)
    kept = []
    for v in sorted(found, key=lambda v: (v[0][1], sum(v[0][2]))):
        if not any(w[0][1] == v[0][1] and divides(w[0][2], v[0][2]) for w in kept):
            kept.append(v)
    return kept


def _shifted(g: list, b: tuple, frame: Frame) -> list:
    nw = frame.nw
    sh = frame.shift(b)
    return [
        (tuple(x + y for x, y in zip(k[:nw], sh)) + k[nw:], comp, tuple(x + y for x, y in zip(e, b)), c)
        for k, comp, e, c in g
    ]


# --- minimization ---------------------------------------------------------------


def _poly_mul(a: dict, b: dict, p: int) -> dict:
    out: dict = {}
    for u, c in a.items():
        for v, e in b.items():
            w = tuple(x + y for x, y in zip(u, v))
            out[w] = out.get(w, 0) + c * e
    return {w: (c % p if p else c) for w, c in out.items() if (c % p if p else c)}


def _col_axpy(col: dict, f: dict, other: dict, p: int) -> None:
    """col -= f * other, entrywise on polynomial columns."""
    for row, poly in other.items():
        acc = dict(col.get(row, {}))
        for w, c in _poly_mul(f, poly, p).items():
            v = acc.get(w, 0) - c
            v = v % p if p else v
            if v:
                acc[w] = v
            else:
                acc.pop(w, None)
        if acc:
            col[row] = acc
        else:
            col.pop(row, None)


def _find_unit(res: FreeResolution, k: int):
    zero = (0,) * res.n
    for c, col in enumerate(res.maps[k]):
        for r, poly in col.items():
            if res.degrees[k][c] == res.degrees[k - 1][r] and poly.get(zero):
                return c, r, poly[zero]
    return None


def minimize(res: FreeResolution) -> FreeResolution:
    """Split off trivial summands R(-a) -> R(-a) until no differential has a
    nonzero constant entry. Twist lists then record graded Betti numbers."""
    field = res.field
    p = field.p
    degrees = [list(d) for d in res.degrees]
    maps = [None] + [[{r: dict(poly) for r, poly in col.items()} for col in cols] for cols in res.maps[1:]]
    out = FreeResolution(res.n, field, degrees, maps)
    for k in range(1, len(degrees)):
        while (hit := _find_unit(out, k)) is not None:
            c, r, u = hit
            pivot = maps[k][c]
            inv = field.inv(u)
            for c2, col in enumerate(maps[k]):
                if c2 != c and r in col:
                    # clear row r: col -= (col[r] / u) * pivot
                    f = {w: (x * inv % p if p else x * inv) for w, x in col[r].items()}
                    _col_axpy(col, f, pivot, p)
            del maps[k][c], degrees[k][c]
            maps[k] = [{(q - (q > r)): poly for q, poly in col.items() if q != r} for col in maps[k]]
            del degrees[k - 1][r]
            if k >= 2:
                del maps[k - 1][r]
            if k + 1 < len(maps):
                maps[k + 1] = [{(q - (q > c)): poly for q, poly in col.items() if q != c} for col in maps[k + 1]]
    while len(degrees) > 1 and not degrees[-1]:
        degrees.pop()
        maps.pop()
    return out


def resolution(J, field: Field = GF32003, minimal: bool = False) -> FreeResolution:
    if isinstance(J, MonomialIdeal):
        res = taylor_resolution(J, field)
        return minimize(res) if minimal else res
    return schreyer_resolution(J)


__all__ = [
    "FreeResolution",
    "check_exactness",
    "minimize",
    "resolution",
    "schreyer_resolution",
    "taylor_resolution",
]
