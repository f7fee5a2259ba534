"""Command-line interface: ``ggp gen | verify | table | bench``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 pole in a
specialized computation, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import cache
from .csoperator import LabeledGegenbauer, _eigensolve, eigensolve
from .families import build_by_recurrence, clear_caches, jack_row
from .formats import bipoly_latex, bipoly_text, export_json, parse_rational
from .scalar import PoleError
from .verify import SUITES, SuiteConfig, default_jobs, pairs_up_to, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_POLE, EXIT_IO = 0, 1, 2, 3, 4

CLI_METHODS = {
    "eigensolver": "eigensolver",
    "recurrence": "recurrence",
    "twin": "twin-recurrence",
    "genfunc": "genfunc",
}


class UsageError(Exception):
    pass


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _rational(s: str):
    try:
        return parse_rational(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def construct(m: int, n: int, method: str = "eigensolver", kappa=None,
              allow_nonpositive: bool = False) -> LabeledGegenbauer:
    """Build P_{m,n} by ``method``; specialized kappa for non-eigensolver methods
    goes through the symbolic polynomial."""
    if method == "eigensolver":
        return eigensolve(m, n, kappa, allow_nonpositive=allow_nonpositive)
    if method == "genfunc":
        if n != 0:
            raise UsageError("genfunc method only builds the n = 0 row")
        g = jack_row(m)[m]
    elif method == "recurrence":
        g = build_by_recurrence(m, n, "lower-n")
    elif method == "twin-recurrence":
        g = build_by_recurrence(m, n, "lower-m")
    else:
        raise UsageError(f"unknown method {method!r}")
    if kappa is None:
        return g
    if kappa <= 0 and not allow_nonpositive:
        raise UsageError("specialized kappa must be positive (use --allow-nonpositive-kappa)")
    return LabeledGegenbauer(m, n, g.poly.specialize(kappa), g.method, kappa)


def render(g: LabeledGegenbauer, fmt: str) -> str:
    if fmt == "json":
        return export_json(g)
    if fmt == "latex":
        return bipoly_latex(g.poly)
    return bipoly_text(g.poly)


# ---------------------------------------------------------------------------
# subcommands

def cmd_gen(args) -> int:
    method = CLI_METHODS[args.method]
    g = None
    cache_dir = cache.default_dir()
    if cache_dir and method == "eigensolver" and args.kappa is None:
        try:
            g = cache.load(cache_dir, args.m, args.n)
        except (OSError, ValueError, KeyError):
            g = None
    if g is None:
        try:
            g = construct(args.m, args.n, method, args.kappa, args.allow_nonpositive_kappa)
        except UsageError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except PoleError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_POLE
    text = render(g, args.format)
    if args.out:
        try:
            cache.write_atomic(Path(args.out), text + "\n")
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_IO
    else:
        print(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    try:
        config = SuiteConfig(
            suites=suites,
            max_degree=args.max_degree,
            m_max=args.m_max,
            n_max=args.n_max,
            a1_max=args.a1_max,
            method=CLI_METHODS[args.method],
            jobs=args.jobs or default_jobs(),
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    report = run_suite(config)
    for r in report.results:
        if not r.passed:
            print(f"FAIL {r.check_name}{list(r.indices)}: {r.residual_description}")
    s = report.summary
    print(f"{report.suite_name}: {s['passed']}/{s['total']} passed, {s['failed']} failed")
    if report.certification_note:
        print(report.certification_note)
    if args.report:
        try:
            cache.write_atomic(Path(args.report), json.dumps(report.to_dict(), indent=1) + "\n")
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK if report.all_passed else EXIT_FAIL


def _table_entry(mn: tuple[int, int]) -> tuple[int, int, str]:
    m, n = mn
    return m, n, export_json(eigensolve(m, n)) + "\n"


def cmd_table(args) -> int:
    out = Path(args.out) if args.out else cache.default_dir()
    if out is None:
        print(f"error: --out not given and {cache.ENV_VAR} not set", file=sys.stderr)
        return EXIT_USAGE
    pairs = pairs_up_to(args.max_degree)
    jobs = args.jobs or default_jobs()
    if jobs > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            entries = list(ex.map(_table_entry, pairs))
    else:
        entries = [_table_entry(p) for p in pairs]
    written = 0
    try:
        for m, n, text in entries:
            written += cache.write_atomic(cache.cache_path(out, m, n), text)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    print(f"{len(entries)} polynomials, {written} written, {len(entries) - written} unchanged")
    return EXIT_OK


def _timed(m: int, n: int, method: str) -> tuple[float, int]:
    _eigensolve.cache_clear()
    clear_caches()
    t0 = time.perf_counter()
    g = construct(m, n, method)
    return time.perf_counter() - t0, len(g.poly)


def bench_rows(max_degree: int, methods: list[str]) -> list[dict]:
    rows = []
    for m, n in pairs_up_to(max_degree):
        row = {"m": m, "n": n, "terms": None}
        for method in methods:
            if method == "genfunc" and n != 0:
                row[method] = None
                continue
            dt, terms = _timed(m, n, method)
            row["terms"] = terms
            row[method] = dt
        if row["terms"] is None:
            row["terms"] = len(eigensolve(m, n).poly)
        rows.append(row)
    return rows


def cmd_bench(args) -> int:
    if args.method == "all":
        methods = list(CLI_METHODS.values())
    elif args.method == "both":
        methods = ["eigensolver", "recurrence"]
    else:
        methods = [CLI_METHODS[args.method]]
    rows = bench_rows(args.max_degree, methods)
    header = f"{'m':>3} {'n':>3} {'terms':>6} " + " ".join(f"{x:>16}" for x in methods)
    print(header)
    for r in rows:
        cells = " ".join(
            f"{'-':>16}" if r[x] is None else f"{r[x] * 1e3:>14.3f}ms" for x in methods
        )
        print(f"{r['m']:>3} {r['n']:>3} {r['terms']:>6} {cells}")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ggp", description="A2 generalized Gegenbauer polynomials over Q(kappa)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="construct one polynomial")
    g.add_argument("--m", type=_nonneg, required=True)
    g.add_argument("--n", type=_nonneg, required=True)
    k = g.add_mutually_exclusive_group()
    k.add_argument("--kappa", type=_rational, default=None, help="specialize at p/q")
    k.add_argument("--symbolic", action="store_true", help="symbolic kappa (default)")
    g.add_argument("--method", choices=list(CLI_METHODS), default="eigensolver")
    g.add_argument("--format", choices=["text", "json", "latex"], default="text")
    g.add_argument("--out")
    g.add_argument("--allow-nonpositive-kappa", action="store_true")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="run a certification suite")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.add_argument("--max-degree", type=_nonneg, default=6)
    v.add_argument("--m-max", type=_nonneg, default=25)
    v.add_argument("--n-max", type=_nonneg, default=25)
    v.add_argument("--a1-max", type=_nonneg, default=30)
    v.add_argument("--method", choices=["eigensolver", "recurrence", "twin"],
                   default="eigensolver", help="construction feeding the checks")
    v.add_argument("--report")
    v.add_argument("--jobs", type=_nonneg, default=0, help="0 = all cores")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="write a2_m{m}_n{n}.json for all m+n <= d")
    t.add_argument("--max-degree", type=_nonneg, required=True)
    t.add_argument("--out")
    t.add_argument("--jobs", type=_nonneg, default=0, help="0 = all cores")
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("bench", help="time constructions per (m, n)")
    b.add_argument("--max-degree", type=_nonneg, required=True)
    b.add_argument("--method", choices=list(CLI_METHODS) + ["both", "all"], default="both")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
