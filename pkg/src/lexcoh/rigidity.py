"""Executable checkers for the rigidity statements on local cohomology.

Every checker evaluates each condition of an equivalence through its own
code path and reports whether they agree; none of them assumes the result
it is checking.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .cohomology import (
    CohomologyTable,
    as_ideal,
    bw_polynomial,
    cancellation_witness,
    cohomology_layers,
    cohomology_table,
    default_window,
    first_difference,
    layer_criterion,
    rows_equal,
    table_criterion,
    truncated_bw,
    union_window,
)
from .groebner import gin, saturate_poly
from .hilbert import HilbertSeries, hilbert_numerator, is_critical, lex_ideal_from_series
from .monomial_ideal import (
    MonomialIdeal,
    colon_var_sat,
    dimension,
    filtration_ideal,
    is_lex_segment,
    is_weakly_stable,
    restrict,
    saturate_m,
)
from .ring import GF32003, Field, RingError


class Invariants:
    """Lazily computed Gin, lex ideal, saturation and tables of one ideal.

    All tables share one window: the union of the default windows of I,
    Gin(I) and I^lex.
    """

    def __init__(self, I, seed=0, trials: int = 2, field: Field = GF32003, window=None):
        self.I = as_ideal(I)
        self.seed = seed
        self.trials = trials
        self.field = field
        self._window = tuple(window) if window else None

    @property
    def n(self) -> int:
        return self.I.n

    @property
    def monomial(self) -> bool:
        return isinstance(self.I, MonomialIdeal)

    @cached_property
    def series(self) -> HilbertSeries:
        return hilbert_numerator(self.I) if self.monomial else self.I.hilbert_series

    @cached_property
    def gin(self) -> MonomialIdeal:
        return gin(self.I, trials=self.trials, seed=self.seed, field=self.field)

    @cached_property
    def lex(self) -> MonomialIdeal:
        return lex_ideal_from_series(self.series)

    @cached_property
    def initial(self) -> MonomialIdeal:
        return self.I if self.monomial else self.I.initial_ideal()

    @cached_property
    def sat(self):
        return saturate_m(self.I) if self.monomial else saturate_poly(self.I)

    @cached_property
    def sat_series(self) -> HilbertSeries:
        S = self.sat
        return hilbert_numerator(S) if isinstance(S, MonomialIdeal) else S.hilbert_series

    @cached_property
    def window(self) -> tuple:
        if self._window:
            return self._window
        return union_window(
            default_window(self.I, self.gin, self.lex),
            default_window(self.gin),
            default_window(self.lex),
        )

    @cached_property
    def table(self) -> CohomologyTable:
        return cohomology_table(self.I, self.window, self.field)

    @cached_property
    def gin_table(self) -> CohomologyTable:
        return cohomology_layers(self.gin, self.window)

    @cached_property
    def lex_table(self) -> CohomologyTable:
        return cohomology_layers(self.lex, self.window)

    @cached_property
    def initial_table(self) -> CohomologyTable:
        if self.monomial:
            return self.table
        return cohomology_table(self.initial, self.window, self.field)

    @cached_property
    def dim(self) -> int:
        return self.series.dimension


def _inv(I, inv: Invariants | None, **kw) -> Invariants:
    if inv is not None:
        return inv
    return I if isinstance(I, Invariants) else Invariants(I, **kw)


@dataclass
class EquivalenceReport:
    """Truth values of the conditions of one equivalence on one instance.

    A condition set to None is not applicable to the instance and is ignored
    by the verdict.
    """

    name: str
    instance: str
    conditions: dict
    witnesses: dict = dc_field(default_factory=dict)
    side: dict = dc_field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        vals = {v for v in self.conditions.values() if v is not None}
        return len(vals) <= 1 and all(self.side.values())

    @property
    def value(self):
        vals = [v for v in self.conditions.values() if v is not None]
        return vals[0] if vals and self.consistent else None

    def __bool__(self):
        return self.consistent

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "instance": self.instance,
            "conditions": self.conditions,
            "consistent": self.consistent,
            "value": self.value,
            "side": self.side,
            "witnesses": {k: repr(v) for k, v in self.witnesses.items()},
        }


@dataclass
class ImplicationReport:
    """For each index i: did the hypothesis hold, and if so the conclusion?"""

    name: str
    instance: str
    hypotheses: dict
    conclusions: dict
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "instance": self.instance,
            "hypotheses": {str(k): v for k, v in self.hypotheses.items()},
            "conclusions": {str(k): v for k, v in self.conclusions.items()},
            "ok": self.ok,
            "failures": [repr(f) for f in self.failures],
        }


# --- Theorem 1.4 and the BW form ------------------------------------------------


def theorem_1_4_check(I, inv: Invariants | None = None, with_bw: bool = True, **kw) -> EquivalenceReport:
    """(1) (I^sat)^lex = (I^lex)^sat; (2) row 0 of I equals that of I^lex;
    (3) all rows equal; (4) Gin(I)^sat = (I^lex)^sat; plus BW(I) = BW(I^lex)
    for monomial I."""
    v = _inv(I, inv, **kw)
    lex_sat = saturate_m(v.lex)
    c1 = lex_ideal_from_series(v.sat_series) == lex_sat
    c2 = rows_equal(v.table, v.lex_table, 0)
    diff = first_difference(v.table, v.lex_table, range(v.n + 1))
    c3 = diff is None
    c4 = saturate_m(v.gin) == lex_sat
    conds = {"1_sat_lex": c1, "2_h0": c2, "3_all_rows": c3, "4_gin_sat": c4}
    if with_bw:
        conds["bw"] = (bw_polynomial(v.I) == bw_polynomial(v.lex)) if v.monomial and not v.I.is_unit() else None
    wit = {"first_difference": diff} if diff else {}
    side = {"bridge": universality_bridge_check(lex_sat).ok}
    return EquivalenceReport("t14", str(v.I), conds, wit, side)


def bw_maximality_check(I, inv: Invariants | None = None, **kw) -> EquivalenceReport:
    """BW(R/I) = BW(R/I^lex) against the Theorem 1.4 verdict.  When they hold,
    also Gin(I)^<i> = (I^lex)^<i> for all i and BW(R/Gin(I)) = BW(R/I)."""
    v = _inv(I, inv, **kw)
    if not v.monomial:
        raise RingError("BW polynomials need a monomial ideal")
    bw_eq = bw_polynomial(v.I) == bw_polynomial(v.lex)
    t14 = theorem_1_4_check(v.I, v, with_bw=False)
    side = {"t14_consistent": t14.consistent}
    if bw_eq:
        d = dimension(v.gin)
        side["gin_filtration"] = all(filtration_ideal(v.gin, i) == filtration_ideal(v.lex, i) for i in range(d))
        side["bw_gin"] = bw_polynomial(v.gin) == bw_polynomial(v.I)
    return EquivalenceReport("bw", str(v.I), {"bw": bw_eq, "t14": t14.value}, {}, side)


# --- Section 4 --------------------------------------------------------------------


def lemma_4_1_check(I: MonomialIdeal, I2: MonomialIdeal) -> bool:
    """Restrictions, and the saturated restrictions, of two weakly stable
    ideals with one Hilbert polynomial share Hilbert polynomials."""
    if not (is_weakly_stable(I) and is_weakly_stable(I2)):
        raise ValueError("both ideals must be weakly stable")
    if I.n != I2.n or hilbert_numerator(I).polynomial != hilbert_numerator(I2).polynomial:
        raise ValueError("the ideals must have the same Hilbert polynomial")
    n = I.n
    for i in range(n):
        a, b = restrict(I, n - i), restrict(I2, n - i)
        if hilbert_numerator(a).polynomial != hilbert_numerator(b).polynomial:
            return False
        if i >= 1:
            if hilbert_numerator(_j_ideal(I, i)).polynomial != hilbert_numerator(_j_ideal(I2, i)).polynomial:
                return False
    return True


def _j_ideal(A: MonomialIdeal, i: int) -> MonomialIdeal:
    """(A_[n-i+1] : X_{n-i+1}^infinity)_[n-i]."""
    n = A.n
    if not 1 <= i < n:
        raise RingError(f"need 1 <= i < n, got i={i}, n={n}")
    m = n - i + 1
    return restrict(colon_var_sat(restrict(A, m), m), m - 1)


@dataclass(frozen=True)
class JPair:
    i: int
    J: MonomialIdeal
    J_prime: MonomialIdeal


def build_j_pair(I, i: int, inv: Invariants | None = None, from_ideal: bool = False, **kw) -> JPair:
    """J from Gin(I) (or from I itself when weakly stable and from_ideal),
    J' by the same recipe from I^lex."""
    v = _inv(I, inv, **kw)
    if from_ideal:
        if not (v.monomial and is_weakly_stable(v.I)):
            raise ValueError("J from I itself needs a weakly stable ideal")
        A = v.I
    else:
        A = v.gin
    return JPair(i, _j_ideal(A, i), _j_ideal(v.lex, i))


def _j_conditions(pair: JPair, seed, trials, field) -> dict:
    J, Jp = pair.J, pair.J_prime
    same_hf = hilbert_numerator(J) == hilbert_numerator(Jp)
    critical = is_critical(J)
    gin_eq = gin(J, trials=trials, seed=seed, field=field) == Jp
    return {"hilbert_J": same_hf, "critical_J": critical, "gin_J": gin_eq}


def corollary_4_5_check(I, i: int, inv: Invariants | None = None, **kw) -> EquivalenceReport:
    v = _inv(I, inv, **kw)
    pair = build_j_pair(v.I, i, v)
    conds = {
        "i_gin_row": rows_equal(v.gin_table, v.lex_table, i),
        "ii_row": rows_equal(v.table, v.lex_table, i),
        "iii_rows": table_criterion(v.table, v.lex_table, i),
    }
    conds.update(_j_conditions(pair, v.seed, v.trials, v.field))
    side = {"bridge": universality_bridge_check(_sat_lex_restriction(v.lex, i)).ok}
    return EquivalenceReport(f"c45[i={i}]", str(v.I), conds, {"J": pair.J, "J'": pair.J_prime}, side)


def _sat_lex_restriction(L: MonomialIdeal, i: int) -> MonomialIdeal:
    m = L.n - i + 1
    return colon_var_sat(restrict(L, m), m)


def corollary_4_3_check(I: MonomialIdeal, i: int, inv: Invariants | None = None, **kw) -> EquivalenceReport:
    """Weakly stable I with J built from I itself.  The five listed conditions
    plus the row-i equality for Gin(I), equivalent to them by Corollary 4.5."""
    v = _inv(I, inv, **kw)
    if not (v.monomial and is_weakly_stable(v.I)):
        raise ValueError("Corollary 4.3 needs a weakly stable ideal")
    pair = build_j_pair(v.I, i, v, from_ideal=True)
    conds = {
        "i_row": rows_equal(v.table, v.lex_table, i),
        "ii_rows": table_criterion(v.table, v.lex_table, i),
    }
    conds.update(_j_conditions(pair, v.seed, v.trials, v.field))
    conds["gin_row"] = rows_equal(v.gin_table, v.lex_table, i)
    return EquivalenceReport(f"c43[i={i}]", str(v.I), conds, {"J": pair.J, "J'": pair.J_prime})


def corollary_4_5_scan(I, inv: Invariants | None = None, **kw) -> dict:
    """Corollary 4.5 verdicts for i = 1..n-1; the true set must be upward closed."""
    v = _inv(I, inv, **kw)
    out = {i: corollary_4_5_check(v.I, i, v) for i in range(1, v.n)}
    values = [r.value for r in out.values()]
    if any(a and b is False for a, b in zip(values, values[1:])):
        raise AssertionError(f"Corollary 4.5 truth set not upward closed for {v.I}: {values}")
    return out


def theorem_4_4_check(I, inv: Invariants | None = None, **kw) -> ImplicationReport:
    """If row i of Gin(I) equals that of I^lex, rows k >= i of I do too.
    Also: all rows of Gin(I) equal to I^lex iff Theorem 1.4 holds."""
    v = _inv(I, inv, **kw)
    hyp, concl, fails = {}, {}, []
    for i in range(v.n + 1):
        hyp[i] = rows_equal(v.gin_table, v.lex_table, i)
        if hyp[i]:
            concl[i] = table_criterion(v.table, v.lex_table, i)
            if not concl[i]:
                fails.append(("conclusion", i, first_difference(v.table, v.lex_table, range(i, v.n + 1))))
    all_rows = all(hyp.values())
    t14 = theorem_1_4_check(v.I, v, with_bw=False)
    if not t14.consistent or t14.value != all_rows:
        fails.append(("base_case", all_rows, t14.conditions))
    return ImplicationReport("t44", str(v.I), hyp, concl, fails)


def remark_4_6_a_check(I, inv: Invariants | None = None, **kw) -> ImplicationReport:
    v = _inv(I, inv, **kw)
    hyp, concl, fails = {}, {}, []
    for i in range(v.n + 1):
        hyp[i] = rows_equal(v.gin_table, v.lex_table, i)
        if hyp[i]:
            concl[i] = rows_equal(v.table, v.lex_table, i)
            if not concl[i]:
                fails.append(("row", i))
    return ImplicationReport("r46a", str(v.I), hyp, concl, fails)


def remark_4_6_b_check(I, inv: Invariants | None = None, **kw) -> ImplicationReport:
    """Truncated BW polynomials of I and I^lex agree exactly when row i of
    Gin(I) equals row i of I^lex (monomial I)."""
    v = _inv(I, inv, **kw)
    hyp, concl, fails = {}, {}, []
    for i in range(v.n + 1):
        hyp[i] = rows_equal(v.gin_table, v.lex_table, i)
        concl[i] = truncated_bw(v.I, i) == truncated_bw(v.lex, i)
        if hyp[i] != concl[i]:
            fails.append(("mismatch", i))
    return ImplicationReport("r46b", str(v.I), hyp, concl, fails)


# --- i-sCM profile and universality ------------------------------------------------


def scm_profile(I, inv: Invariants | None = None, **kw) -> dict:
    """i -> R/I is i-sCM for i = 0..dim+1, by the table and layer criteria
    (which must agree); the truth set must be upward closed."""
    v = _inv(I, inv, **kw)
    if v.series.dimension < 0:
        return {}
    G_table = cohomology_layers(v.gin, v.window)
    out = {}
    for i in range(v.dim + 2):
        by_table = table_criterion(v.table, G_table, i)
        if v.monomial:
            by_layers = layer_criterion(v.I, v.gin, i)
            if by_layers != by_table:
                from .cohomology import CriteriaDisagreement

                raise CriteriaDisagreement(f"{v.I}, i={i}: table {by_table}, layers {by_layers}")
        out[i] = by_table
    vals = [out[i] for i in sorted(out)]
    if any(a and not b for a, b in zip(vals, vals[1:])):
        raise AssertionError(f"i-sCM truth set not upward closed for {v.I}: {vals}")
    return out


@dataclass(frozen=True)
class BridgeResult:
    ok: bool
    applicable: bool

    def __bool__(self):
        return self.ok


def universality_bridge_check(L: MonomialIdeal) -> BridgeResult:
    """A saturated lex ideal of positive depth has at most n generators."""
    if L.is_unit() or L.is_zero() or not is_lex_segment(L) or saturate_m(L) != L:
        return BridgeResult(True, False)
    return BridgeResult(len(L.gens) <= L.n, True)


def cancellation_pairs(I, inv: Invariants | None = None, **kw) -> dict:
    """Cancellation witnesses for (I, in(I)) and (I, I^lex); raises on failure."""
    v = _inv(I, inv, **kw)
    return {
        "initial": cancellation_witness(v.table, v.initial_table, v.window),
        "lex": cancellation_witness(v.table, v.lex_table, v.window),
    }


__all__ = [
    "BridgeResult",
    "EquivalenceReport",
    "ImplicationReport",
    "Invariants",
    "JPair",
    "build_j_pair",
    "bw_maximality_check",
    "cancellation_pairs",
    "corollary_4_3_check",
    "corollary_4_5_check",
    "corollary_4_5_scan",
    "lemma_4_1_check",
    "remark_4_6_a_check",
    "remark_4_6_b_check",
    "scm_profile",
    "theorem_1_4_check",
    "theorem_4_4_check",
    "universality_bridge_check",
]


