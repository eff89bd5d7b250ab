"""Command line interface.

Exit codes: 0 success or verdict true, 2 verdict false (a checked statement
failed on the input), 3 input error, 4 gin certification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cohomology import (
    CancellationError,
    bw_polynomial,
    cancellation_witness,
    cohomology_ext,
    cohomology_layers,
    cohomology_table,
    is_i_scm,
    serre_check,
)
from .corpus import CorpusSpec, generate_corpus
from .groebner import GinCertificationError, gin, saturate
from .harness import CHECKS, DEFAULT_CHECKS, run_corpus
from .hilbert import hilbert_numerator, lex_ideal_with_certificate
from .io import parse_ideal_files, read_ideal_files, write_ideal_files
from .monomial_ideal import MonomialIdeal
from .ring import RingError
from .rigidity import (
    Invariants,
    bw_maximality_check,
    corollary_4_5_check,
    theorem_1_4_check,
    theorem_4_4_check,
)

OK, FALSE, INPUT_ERROR, GIN_FAILURE = 0, 2, 3, 4


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _glue_windows(argv: list) -> list:
    # "--window -3:1" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for a in it:
        if a == "--window":
            out.append("--window=" + next(it, ""))
        else:
            out.append(a)
    return out


def _load(path: str) -> list:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        files = parse_ideal_files(text)
    except (OSError, RingError, ValueError) as e:
        raise InputError(str(e)) from e
    if not files:
        raise InputError(f"no ideal found in {path}")
    return files


def _series_of(I):
    return hilbert_numerator(I) if isinstance(I, MonomialIdeal) else I.hilbert_series


def _parse_window(text: str | None):
    if not text:
        return None
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError as e:
        raise InputError(f"window must look like a:b, got {text!r}") from e
    if a > b:
        raise InputError("empty window")
    return (a, b)


class Output:
    def __init__(self, args):
        self.fmt = args.format
        self.path = getattr(args, "out", None)
        self.chunks: list = []

    def emit(self, payload: dict, text: str | None = None, csv: str | None = None):
        if self.fmt == "json":
            self.chunks.append(json.dumps(payload, default=str))
        elif self.fmt == "csv" and csv is not None:
            self.chunks.append(csv.rstrip("\n"))
        else:
            self.chunks.append(text if text is not None else json.dumps(payload, default=str, indent=1))

    def flush(self):
        data = "\n".join(self.chunks) + ("\n" if self.chunks else "")
        if self.path:
            Path(self.path).write_text(data)
        else:
            sys.stdout.write(data)


def _ideal_payload(label, J, **extra) -> dict:
    return {"instance": label, "ideal": str(J), **extra}


# --- commands --------------------------------------------------------------


def cmd_hilbert(args, out: Output) -> int:
    for f in _load(args.file):
        I = f.ideal()
        H = _series_of(I)
        values = H.values(range(args.upto + 1))
        P = H.polynomial
        payload = _ideal_payload(
            f.label, f.body(), numerator=list(H.numerator), n=H.n, dimension=H.dimension,
            multiplicity=H.multiplicity, values=values, polynomial=list(P.coefficients),
        )
        out.emit(payload, f"{f.body()}\n  series: {H}\n  dim {H.dimension}, mult {H.multiplicity}\n  H: {values}\n  P(j) = {P}")
    return OK


def cmd_lex(args, out: Output) -> int:
    for f in _load(args.file):
        L, cert = lex_ideal_with_certificate(_series_of(f.ideal()))
        out.emit(_ideal_payload(f.label, L, gotzmann=cert.gotzmann, stop_degree=cert.stop_degree), str(L))
    return OK


def cmd_sat(args, out: Output) -> int:
    for f in _load(args.file):
        S = saturate(f.ideal())
        out.emit(_ideal_payload(f.label, S), str(S))
    return OK


def cmd_gin(args, out: Output) -> int:
    for f in _load(args.file):
        G = gin(f.ideal(), trials=args.gin_trials, seed=args.seed, field=f.ctx.field, engine=args.engine)
        out.emit(_ideal_payload(f.label, G, trials=args.gin_trials, seed=args.seed), str(G))
    return OK


def cmd_bw(args, out: Output) -> int:
    for f in _load(args.file):
        I = f.ideal()
        if not isinstance(I, MonomialIdeal):
            raise InputError("bw needs a monomial ideal")
        B = bw_polynomial(I)
        out.emit(_ideal_payload(f.label, f.body(), bw=str(B), coefficients=[[k, d, c] for (k, d), c in B.coefficients]), str(B))
    return OK


def cmd_localcoh(args, out: Output) -> int:
    window = _parse_window(args.window)
    for f in _load(args.file):
        I = f.ideal()
        if args.method == "layers":
            if not isinstance(I, MonomialIdeal):
                raise InputError("the layers route needs a monomial ideal")
            T = cohomology_layers(I, window)
        elif args.method == "ext":
            T = cohomology_ext(I, window, f.ctx.field)
        else:
            T = cohomology_table(I, window, f.ctx.field)
        payload = T.to_dict()
        payload["instance"] = f.label
        out.emit(payload, f"{f.body()}  [{T.route}]\n{T.to_text()}", T.to_csv())
    return OK


def cmd_scm(args, out: Output) -> int:
    for f in _load(args.file):
        v = is_i_scm(f.ideal(), 0, seed=args.seed)
        out.emit(_ideal_payload(f.label, f.body(), scm=v), f"{f.body()}: {'sCM' if v else 'not sCM'}")
    return OK


def cmd_pscm(args, out: Output) -> int:
    for f in _load(args.file):
        v = is_i_scm(f.ideal(), args.i, seed=args.seed)
        out.emit(_ideal_payload(f.label, f.body(), i=args.i, i_scm=v), f"{f.body()}: {args.i}-sCM {v}")
    return OK


def cmd_check(args, out: Output) -> int:
    status = OK
    for f in _load(args.file):
        I = f.ideal()
        v = Invariants(I, seed=args.seed, trials=args.gin_trials, field=f.ctx.field, window=_parse_window(args.window))
        what = args.what
        if what == "t14":
            r = theorem_1_4_check(I, v)
            ok, payload = r.consistent, r.to_dict()
        elif what == "bw":
            if not v.monomial:
                raise InputError("check bw needs a monomial ideal")
            r = bw_maximality_check(I, v)
            ok, payload = r.consistent, r.to_dict()
        elif what == "c45":
            if args.i is None:
                raise InputError("check c45 needs --i")
            r = corollary_4_5_check(I, args.i, v)
            ok, payload = r.consistent, r.to_dict()
        elif what == "t44":
            r = theorem_4_4_check(I, v)
            ok, payload = r.ok, r.to_dict()
        elif what == "cancel":
            payload = {"instance": f.label, "ideal": f.body()}
            try:
                cancellation_witness(v.table, v.initial_table, v.window)
                cancellation_witness(v.table, v.lex_table, v.window)
                ok = True
            except CancellationError as e:
                ok = False
                payload.update(degree=e.j, recurrence=e.e)
        else:  # serre
            res = serre_check(v.I, table=v.table)
            ok = res.ok
            payload = {"instance": f.label, "ideal": f.body(), "failed_at": res.detail}
        payload["verdict"] = ok
        payload["instance"] = f.label or f.body()
        out.emit(payload, f"{f.body()}: {what} {'TRUE' if ok else 'FALSE'}")
        if not ok:
            status = FALSE
    return status


def cmd_corpus(args, out: Output) -> int:
    spec_path = Path(args.spec)
    try:
        if spec_path.suffix == ".json":
            files = generate_corpus(CorpusSpec.load(spec_path))
        else:
            files = read_ideal_files(spec_path)
    except (OSError, ValueError, TypeError, RingError) as e:
        raise InputError(str(e)) from e
    if args.action == "generate":
        if args.out:
            write_ideal_files(args.out, files)
        else:
            sys.stdout.write("\n".join(f.to_text() for f in files))
        return OK
    checks = tuple(args.checks.split(",")) if args.checks else DEFAULT_CHECKS
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise InputError(f"unknown checks {unknown}; available: {sorted(CHECKS)}")
    sink = open(args.out, "a") if args.out else sys.stdout
    failed = gin_failed = 0
    try:
        for records in run_corpus(files, checks, args.seed, args.gin_trials, args.jobs):
            for r in records:
                sink.write(json.dumps(r, default=str) + "\n")
                if not r.get("ok"):
                    if r.get("error") == "gin-certification":
                        gin_failed += 1
                    else:
                        failed += 1
            sink.flush()
    finally:
        if sink is not sys.stdout:
            sink.close()
    summary = {"instances": len(files), "failed_records": failed, "gin_failures": gin_failed}
    sys.stderr.write(json.dumps(summary) + "\n")
    if failed:
        return FALSE
    return GIN_FAILURE if gin_failed else OK


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="master seed for all random choices")
    common.add_argument("--gin-trials", type=int, default=2, help="independent coordinate changes per gin")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")

    p = _Parser(prog="lexcoh", description="Lex ideals, generic initial ideals and local cohomology tables.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("hilbert", cmd_hilbert, "Hilbert series, function and polynomial of R/I")
    sp.add_argument("file")
    sp.add_argument("--upto", type=int, default=10)
    add("lex", cmd_lex, "lex ideal with the same Hilbert function").add_argument("file")
    add("sat", cmd_sat, "saturation I : m^infinity").add_argument("file")
    sp = add("gin", cmd_gin, "certified generic initial ideal (degrevlex)")
    sp.add_argument("file")
    sp.add_argument("--engine", choices=("linalg", "buchberger"), default="linalg")
    add("bw", cmd_bw, "BW polynomial of a monomial ideal").add_argument("file")
    sp = add("localcoh", cmd_localcoh, "local cohomology table of R/I")
    sp.add_argument("file")
    sp.add_argument("--method", choices=("layers", "ext", "auto"), default="auto")
    sp.add_argument("--window", help="degree window a:b")
    add("scm", cmd_scm, "is R/I sequentially Cohen-Macaulay").add_argument("file")
    sp = add("pscm", cmd_pscm, "is R/I i-partially sequentially Cohen-Macaulay")
    sp.add_argument("file")
    sp.add_argument("--i", type=int, required=True)
    sp = add("check", cmd_check, "run one statement checker")
    sp.add_argument("what", choices=("t14", "bw", "c45", "t44", "cancel", "serre"))
    sp.add_argument("file")
    sp.add_argument("--i", type=int)
    sp.add_argument("--window", help="degree window a:b")
    sp = add("corpus", cmd_corpus, "generate or run a corpus (JSON spec or ideal file)")
    sp.add_argument("action", choices=("generate", "run"))
    sp.add_argument("spec")
    sp.add_argument("--checks", help=f"comma separated subset of {','.join(CHECKS)}")
    sp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_glue_windows(argv))
    except SystemExit as e:  # usage errors and --help
        return e.code if isinstance(e.code, int) else INPUT_ERROR
    out = Output(args)
    try:
        code = args.func(args, out)
    except (InputError, RingError) as e:
        sys.stderr.write(f"input error: {e}\n")
        return INPUT_ERROR
    except GinCertificationError as e:
        sys.stderr.write(f"gin certification failed: {e}\n")
        return GIN_FAILURE
    if args.command != "corpus":
        out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
