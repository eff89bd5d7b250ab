"""Per-instance check runner producing JSON-ready records."""
from __future__ import annotations

import traceback

from .cohomology import (
    CancellationError,
    CriteriaDisagreement,
    cohomology_ext,
    cohomology_layers,
    first_difference,
    serre_check,
    tables_leq,
)
from .groebner import GinCertificationError, gin
from .hilbert import hilbert_numerator
from .io import IdealFile
from .monomial_ideal import MonomialIdeal, dimension, is_weakly_stable, saturate_m
from .resolution import resolution
from .rigidity import (
    Invariants,
    bw_maximality_check,
    cancellation_pairs,
    corollary_4_3_check,
    corollary_4_5_scan,
    remark_4_6_a_check,
    scm_profile,
    theorem_1_4_check,
    theorem_4_4_check,
)


def _chain(v: Invariants) -> dict:
    lo = tables_leq(v.table, v.gin_table)
    hi = tables_leq(v.gin_table, v.lex_table)
    return {"ok": lo is None and hi is None, "I_vs_gin": lo, "gin_vs_lex": hi}


def _routes(v: Invariants) -> dict:
    if not (v.monomial and is_weakly_stable(v.I)) or v.I.is_unit():
        return {"ok": True, "applicable": False}
    A = cohomology_layers(v.I, v.window)
    B = cohomology_ext(v.I, v.window)
    diff = first_difference(A, B, range(v.n + 1), v.window)
    return {"ok": diff is None, "difference": diff}


def _serre(v: Invariants) -> dict:
    out = {"I": serre_check(v.I, table=v.table), "gin": serre_check(v.gin, table=v.gin_table),
           "lex": serre_check(v.lex, table=v.lex_table)}
    return {"ok": all(out.values()), "failed_at": {k: r.detail for k, r in out.items() if not r}}


def _hilbert(v: Invariants) -> dict:
    """Resolution alternating sum vs Hilbert numerator; pole order vs dimension."""
    if v.series.dimension < 0:
        return {"ok": True, "applicable": False}
    res = resolution(v.I if v.monomial else v.I, v.field)
    alt_ok = res.hilbert_series() == v.series
    comp_ok = res.check_composition()
    dims = {}
    for name, J in (("I", v.initial), ("gin", v.gin), ("lex", v.lex)):
        dims[name] = (hilbert_numerator(J).dimension, dimension(J))
    dim_ok = all(a == b for a, b in dims.values())
    return {"ok": alt_ok and comp_ok and dim_ok, "alt_sum": alt_ok, "composition": comp_ok, "dims": dims}


def _cancel(v: Invariants) -> dict:
    try:
        w = cancellation_pairs(v.I, v)
        return {"ok": True, "trivial": {k: x.is_trivial() for k, x in w.items()}}
    except CancellationError as e:
        return {"ok": False, "degree": e.j, "recurrence": e.e}


def _report(r) -> dict:
    d = r.to_dict()
    d.pop("instance", None)
    d["ok"] = bool(r)
    return d


def _scm(v: Invariants) -> dict:
    try:
        prof = scm_profile(v.I, v)
        return {"ok": True, "profile": prof}
    except (CriteriaDisagreement, AssertionError) as e:
        return {"ok": False, "error": str(e)}


def _c45(v: Invariants) -> dict:
    try:
        scan = corollary_4_5_scan(v.I, v)
    except AssertionError as e:
        return {"ok": False, "error": str(e)}
    return {"ok": all(scan.values()), "reports": {i: r.to_dict() for i, r in scan.items()}}


def _c43(v: Invariants) -> dict:
    if not (v.monomial and is_weakly_stable(v.I)):
        return {"ok": True, "applicable": False}
    reps = {i: corollary_4_3_check(v.I, i, v) for i in range(1, v.n)}
    return {"ok": all(reps.values()), "reports": {i: r.to_dict() for i, r in reps.items()}}


def _gin_structure(v: Invariants) -> dict:
    G = v.gin
    idem = gin(G, trials=v.trials, seed=v.seed, field=v.field) == G
    ws = is_weakly_stable(G)
    if v.monomial:
        sat = gin(saturate_m(v.I), trials=v.trials, seed=v.seed, field=v.field) == saturate_m(G)
    else:
        sat = None
    return {"ok": idem and ws and sat is not False, "idempotent": idem, "weakly_stable": ws, "sat": sat}


CHECKS = {
    "t14": lambda v: _report(theorem_1_4_check(v.I, v)),
    "bw": lambda v: _report(bw_maximality_check(v.I, v)) if v.monomial else {"ok": True, "applicable": False},
    "c45": _c45,
    "c43": _c43,
    "t44": lambda v: _report(theorem_4_4_check(v.I, v)),
    "r46a": lambda v: _report(remark_4_6_a_check(v.I, v)),
    "cancel": _cancel,
    "serre": _serre,
    "chain": _chain,
    "routes": _routes,
    "scm": _scm,
    "hilbert": _hilbert,
    "gin": _gin_structure,
}

DEFAULT_CHECKS = ("chain", "cancel", "t14", "bw", "scm", "t44", "r46a", "c45", "c43", "serre", "hilbert", "routes")


def run_instance(f: IdealFile, checks=DEFAULT_CHECKS, seed=0, trials: int = 2, inv: Invariants | None = None) -> list:
    """One record per check; errors are captured in the record."""
    I = f.ideal()
    label = f.label or str(I)
    v = inv or Invariants(I, seed=seed, trials=trials, field=f.ctx.field)
    records = []
    for name in checks:
        rec = {"instance": label, "ideal": f.body(), "n": f.n, "check": name}
        try:
            rec.update(CHECKS[name](v))
        except GinCertificationError as e:
            rec.update({"ok": False, "error": "gin-certification", "detail": str(e)})
        except Exception as e:  # recorded, never swallowed silently
            rec.update({"ok": False, "error": type(e).__name__, "detail": str(e), "trace": traceback.format_exc(limit=3)})
        records.append(rec)
    return records


def _run_one(args):
    f, checks, seed, trials = args
    return run_instance(f, checks, seed, trials)


def run_corpus(files, checks=DEFAULT_CHECKS, seed=0, trials: int = 2, jobs: int = 1):
    """Yield record lists per instance, in input order."""
    tasks = [(f, tuple(checks), seed, trials) for f in files]
    if jobs <= 1:
        for t in tasks:
            yield _run_one(t)
        return
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as ex:
        yield from ex.map(_run_one, tasks, chunksize=4)


__all__ = ["CHECKS", "DEFAULT_CHECKS", "run_corpus", "run_instance", "MonomialIdeal"]
