"""Command line: build, analyze, verify, oracle-check.

Exit status is 0 on success, 1 when a check fails (the report is still
written) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
import warnings
from contextlib import contextmanager

from .bracketlang import BracketSyntaxError, VContext, parse
from .ffield import GF, FieldError
from .freelie_oracle import MAX_DEGREE as ORACLE_MAX, brute_quotient_dims
from .identity_verifier import SUITES, SiteError, verify_suite
from .nqengine import (EngineError, Presentation, build, central_quotient, change_generators,
                       dump_algebra)
from .presets import PresetError, default_max_degree, make_preset
from .presfile import PresentationFileError, read_presentation
from .thinanalysis import AnalysisError, diamond_report, find_standard_generators, match_expected_pattern

REPORT_VERSION = 1

log = logging.getLogger("thinlie")


class UsageError(Exception):
    pass


# --- configuration ---------------------------------------------------------------

def _add_source(sp):
    g = sp.add_argument_group("algebra")
    g.add_argument("--p", type=int, help="characteristic, a prime > 3")
    g.add_argument("--q", type=int, help="power of p, > 5")
    g.add_argument("--k", type=int, default=1, help="field GF(p^k) (default 1)")
    g.add_argument("--s", type=int, help="exponent s of the finite-type period p^s")
    g.add_argument("--lambda", dest="lam", help="type parameter, e.g. 3 or 1+2*t")
    g.add_argument("--modulus", help="field modulus coefficients c0,c1,...,ck")
    g.add_argument("--presentation", help="presentation file instead of preset parameters")
    g.add_argument("--max-degree", type=int, help="build N up to this degree")
    g.add_argument("--consistency", choices=("full", "pairwise"), default="full",
                   help="Jacobi rows to impose; pairwise is faster but can overcount dimensions")
    g.add_argument("--output", "-o", help="write the JSON report here (default stdout)")
    g.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")


def _add_quotient(sp):
    sp.add_argument("--iterations", type=int, default=1, help="central quotients to take (default 1)")


def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thinlie", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build N degree by degree")
    _add_source(b)
    b.add_argument("--dump", help="write the algebra dump (JSON) here")

    a = sub.add_parser("analyze", help="quotient by the centre and classify diamonds")
    _add_source(a)
    _add_quotient(a)
    a.add_argument("--dump", help="write the quotient's dump (JSON) here")

    v = sub.add_parser("verify", help="run identity suites on the quotient")
    _add_source(v)
    _add_quotient(v)
    v.add_argument("--suite", action="append", help=f"suite name or 'all' (choices: {', '.join(SUITES)})")
    v.add_argument("--at", help="single site, e.g. k=3 or m=49")

    o = sub.add_parser("oracle-check", help="compare engine dimensions with the Lyndon-basis oracle")
    _add_source(o)
    o.add_argument("--maxd", type=int, default=ORACLE_MAX)
    o.add_argument("--free", action="store_true", help="no relators")
    o.add_argument("--relator", action="append", default=[], help="relator text; repeatable")
    return ap


def _modulus(text):
    if text is None:
        return None
    try:
        return [int(c) for c in text.split(",")]
    except ValueError:
        raise UsageError(f"bad --modulus {text!r}") from None


def _presentation(args) -> Presentation:
    try:
        if args.presentation:
            return read_presentation(args.presentation)
        if args.p is None:
            raise UsageError("give --p (with --q, --s, --lambda) or --presentation")
        if getattr(args, "free", False) or getattr(args, "relator", None):
            F = GF(args.p, args.k, _modulus(args.modulus))
            q = args.q if args.q is not None else args.p
            ctx = VContext(args.p, args.q) if args.q is not None else None
            rels = [parse(t, ctx, F, homogeneous=True) for t in args.relator]
            return Presentation(F, q, [r for r in rels if r.terms], label="free" if not rels else "custom")
        missing = [n for n, v in (("--q", args.q), ("--s", args.s), ("--lambda", args.lam)) if v is None]
        if missing:
            raise UsageError(f"missing {', '.join(missing)}")
        return make_preset(args.p, args.q, args.s, args.lam, k=args.k, modulus=_modulus(args.modulus))
    except (PresetError, FieldError, BracketSyntaxError, PresentationFileError, OSError) as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _max_degree(args, P: Presentation) -> int:
    if args.max_degree is not None:
        D = args.max_degree
    elif {"s"} <= set(P.params):
        D = default_max_degree(P.field.p, P.q, P.params["s"])
    else:
        D = max(P.max_degree + 2, 2 * P.q)
    if D < 3:
        raise UsageError("--max-degree must be at least 3")
    if D < P.max_degree + 2:
        log.warning("max degree %d is below relator degree %d + 2; later relators are ignored",
                    D, P.max_degree)
    return D


def _params(P: Presentation) -> dict:
    F = P.field
    lam = P.params.get("lambda")
    return {
        "p": F.p, "q": P.q, "k": F.k, "s": P.params.get("s"),
        "lambda": None if lam is None else str(lam),
        "modulus": list(F.modulus),
    }


class _Clock:
    def __init__(self):
        self.times = {}

    @contextmanager
    def __call__(self, name):
        t = time.perf_counter()
        yield
        self.times[name] = round(time.perf_counter() - t, 4)


def _emit(args, report: dict, clock: _Clock):
    if args.timings:
        report["timings"] = clock.times
    text = json.dumps(report, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(path, A):
    with open(path, "w") as fh:
        json.dump(dump_algebra(A), fh)
        fh.write("\n")


# --- commands --------------------------------------------------------------------

def _build(args, clock):
    P = _presentation(args)
    D = _max_degree(args, P)
    with clock("build"):
        N = build(P, D, consistency=args.consistency)
    return P, D, N


def cmd_build(args) -> int:
    clock = _Clock()
    P, D, N = _build(args, clock)
    report = {
        "version": REPORT_VERSION, "command": "build", "params": _params(P),
        "max_degree": D, "horizon": N.computed_to, "status": N.status,
        "dims": N.dims[1:N.computed_to + 1],
    }
    if args.dump:
        _dump(args.dump, N)
    _emit(args, report, clock)
    return 0


def _analyze(args, clock):
    P, D, N = _build(args, clock)
    if args.iterations < 1 or D - args.iterations < 3:
        raise UsageError("--iterations must be >= 1 and leave at least degree 3")
    notes = []
    with clock("quotient"), warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        L = central_quotient(N, iterations=args.iterations)
    notes.extend(str(w.message) for w in caught)
    with clock("analyze"):
        try:
            sg = find_standard_generators(L)
            if not sg.is_identity:
                notes.append(f"generators changed to x'={list(map(int, sg.x))}, y'={list(map(int, sg.y))}")
                L = change_generators(L, sg.x, sg.y)
            std = {"x": [L.field.format_code(c) for c in sg.x], "y": [L.field.format_code(c) for c in sg.y]}
        except AnalysisError as exc:
            std = None
            notes.append(f"standard generators: {exc}")
        report = diamond_report(L, params=P.params)
        if std is None:
            report.verdicts["thin"] = False
        if "s" in P.params and "lambda" in P.params:
            match_expected_pattern(report, P.field.p, P.q, P.params["s"], P.params["lambda"])
    return P, D, N, L, report, std, notes


def _analysis_json(P, D, report, std, notes, command) -> dict:
    verdicts = report.verdicts
    return {
        "version": REPORT_VERSION,
        "command": command,
        "params": _params(P),
        "max_degree": D,
        "horizon": report.horizon,
        "dims": report.dims,
        "diamonds": [r.to_json() for r in report.diamonds],
        "checks": {
            "covering": verdicts["covering"],
            "thin": verdicts["thin"],
            "pattern": verdicts["pattern"],
            "no_consecutive": verdicts["no_consecutive"],
            "spacing": verdicts["spacing"],
            "y_centralizer": verdicts["y_centralizer"],
            "suites": {},
        },
        "standard_generators": std,
        "discrepancies": report.discrepancies,
        "notes": notes,
    }


def _failed(checks: dict) -> bool:
    return any(v is False for k, v in checks.items() if k != "suites")


def cmd_analyze(args) -> int:
    clock = _Clock()
    P, D, N, L, report, std, notes = _analyze(args, clock)
    out = _analysis_json(P, D, report, std, notes, "analyze")
    if args.dump:
        _dump(args.dump, L)
    _emit(args, out, clock)
    return 1 if _failed(out["checks"]) else 0


def _site(text):
    if text is None:
        return None
    key, sep, val = text.partition("=")
    if not sep or not val.strip().lstrip("-").isdigit():
        raise UsageError(f"--at expects key=N, got {text!r}")
    return {key.strip(): int(val)}


def cmd_verify(args) -> int:
    names = args.suite or ["all"]
    if "all" in names:
        names = list(SUITES)
    bad = [n for n in names if n not in SUITES]
    if bad:
        raise UsageError(f"unknown suite(s) {', '.join(bad)}")
    site = _site(args.at)
    clock = _Clock()
    P, D, N, L, report, std, notes = _analyze(args, clock)
    out = _analysis_json(P, D, report, std, notes, "verify")
    failed = _failed(out["checks"])
    with clock("suites"):
        for name in names:
            try:
                res = verify_suite(L, name, report, N=N, site=site)
            except SiteError as exc:
                raise UsageError(str(exc)) from None
            summary = res.summary()
            summary["ok"] = res.ok
            summary["failures"] = [e.to_json() for e in res.failures]
            summary["vacuous_sites"] = [{"site": e.site, "label": e.label, "reason": e.note} for e in res.vacuous]
            out["checks"]["suites"][name] = summary
            failed = failed or not res.ok
    _emit(args, out, clock)
    return 1 if failed else 0


def cmd_oracle_check(args) -> int:
    if not 1 <= args.maxd <= ORACLE_MAX:
        raise UsageError(f"--maxd must be in 1..{ORACLE_MAX}")
    P = _presentation(args)
    clock = _Clock()
    with clock("engine"):
        engine = build(P, max(args.maxd, 2), consistency=args.consistency).dims[1:args.maxd + 1]
    with clock("oracle"):
        oracle = brute_quotient_dims(P, args.maxd)
    report = {
        "version": REPORT_VERSION, "command": "oracle-check", "params": _params(P),
        "maxd": args.maxd, "engine": engine, "oracle": oracle, "equal": engine == oracle,
    }
    _emit(args, report, clock)
    return 0 if engine == oracle else 1


COMMANDS = {"build": cmd_build, "analyze": cmd_analyze, "verify": cmd_verify, "oracle-check": cmd_oracle_check}


def main(argv=None) -> int:
    ap = parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"thinlie {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        print(f"thinlie {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
