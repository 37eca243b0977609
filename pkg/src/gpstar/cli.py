"""Command line: color, verify, exact, sweep and export.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 indeterminate (search budget ran out or the instance is unsupported).
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from pathlib import Path
from typing import Sequence

from .construct.dispatch import dispatch
from .construct.report import ColoringReport, RepairFailed, Unsupported
from .exact import Indeterminate, Infeasible, SearchConfig, star_chromatic_index
from .gp_graph import GPGraph
from .io import dump_json, load_coloring, to_dot
from .verify import verify_star

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3
WORKERS_ENV = "GPSTAR_WORKERS"
CSV_COLUMNS = ("n", "k", "d", "t", "method", "colors_used", "faithful", "runtime_ms")


class UsageError(Exception):
    pass


def _graph(n: int, k: int) -> GPGraph:
    try:
        return GPGraph(n, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _report_ok(report: ColoringReport, allow_six: bool) -> bool:
    limit = 6 if allow_six else 5
    return not verify_star(report.graph, report.coloring, require_total=True) and report.colors_used <= limit


def cmd_color(args) -> int:
    g = _graph(args.n, args.k)
    try:
        report = dispatch(g)
    except (Unsupported, RepairFailed) as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    if args.dot:
        _write(to_dot(report.coloring), args.output)
    else:
        _write(dump_json(report.to_dict()), args.output)
    if not _report_ok(report, args.allow_six):
        print(f"{report.colors_used} colors or defects left; not accepted", file=sys.stderr)
        return EXIT_VERIFY
    if args.require_faithful and not report.faithful:
        print("the scripted construction needed repair", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        col = load_coloring(args.file)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    viol = verify_star(col.graph, col, require_total=args.require_total)
    sys.stdout.write(dump_json({"violations": [v.to_dict(col.graph) for v in viol]}))
    return EXIT_OK if not viol else EXIT_VERIFY


def cmd_exact(args) -> int:
    g = _graph(args.n, args.k)
    if args.budget < 1:
        raise UsageError("--budget must be positive")
    if not 1 <= args.max_colors <= 7:
        raise UsageError("max_colors must lie in 1..7")
    config = SearchConfig(max_colors=args.max_colors, node_budget=args.budget, edge_bound=len(g.edges))
    try:
        index = star_chromatic_index(g, config)
    except Indeterminate as exc:
        print(f"Indeterminate: node budget {args.budget} exhausted after {exc.nodes} nodes")
        return EXIT_INDETERMINATE
    except Infeasible:
        print(f"> {args.max_colors}")
        return EXIT_VERIFY
    print(index)
    return EXIT_OK


def sweep_instances(n_min: int, n_max: int, k: int | None, gcd_min: int | None, gcd_eq: int | None):
    """(n, k) pairs of a sweep in (n, k) order."""
    for n in range(max(n_min, 3), n_max + 1):
        ks = [k] if k is not None else range(1, n // 2 + 1)
        for kk in ks:
            if not 1 <= kk <= n // 2:
                continue
            d = gcd(n, kk)
            if gcd_min is not None and d < gcd_min:
                continue
            if gcd_eq is not None and d != gcd_eq:
                continue
            yield n, kk


def sweep_row(n: int, k: int, allow_six: bool = False) -> tuple[dict, bool]:
    """One CSV row and whether the instance passed."""
    g = GPGraph(n, k)
    start = time.perf_counter()
    try:
        report = dispatch(g)
    except (Unsupported, RepairFailed) as exc:
        method, colors, faithful, ok = type(exc).__name__, "", "", False
    else:
        method, colors, faithful = report.method.value, report.colors_used, report.faithful
        ok = _report_ok(report, allow_six)
    ms = (time.perf_counter() - start) * 1000
    row = {"n": n, "k": k, "d": g.d, "t": g.t, "method": method, "colors_used": colors,
           "faithful": faithful, "runtime_ms": f"{ms:.1f}"}
    return row, ok


def _sweep_job(job):
    return sweep_row(*job)


def cmd_sweep(args) -> int:
    jobs = [(n, k, args.allow_six) for n, k in
            sweep_instances(args.n_min, args.n_max, args.k, args.gcd_min, args.gcd)]
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    if workers < 1:
        raise UsageError("worker count must be positive")
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_job, jobs, chunksize=4))
    else:
        results = [_sweep_job(j) for j in jobs]
    results.sort(key=lambda r: (r[0]["n"], r[0]["k"]))
    try:
        handle = open(args.output, "w", newline="") if args.output else sys.stdout
    except OSError as exc:
        print(f"cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row, _ in results:
            writer.writerow(row)
    finally:
        if handle is not sys.stdout:
            handle.close()
    failed = [r for r, ok in results if not ok]
    if failed:
        print(f"{len(failed)} of {len(results)} instances failed", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_export(args) -> int:
    if args.input:
        try:
            col = load_coloring(args.input)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            print(f"cannot read {args.input}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        if args.n is None or args.k is None:
            raise UsageError("export needs n and k, or --input")
        try:
            col = dispatch(_graph(args.n, args.k)).coloring
        except (Unsupported, RepairFailed) as exc:
            print(f"indeterminate: {exc}", file=sys.stderr)
            return EXIT_INDETERMINATE
    text = to_dot(col) if args.format == "dot" else dump_json(col.to_dict())
    _write(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gpstar", description="Star edge colorings of generalized Petersen graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("color", help="color GP(n,k) and print the report")
    c.add_argument("n", type=int)
    c.add_argument("k", type=int)
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--dot", action="store_true", help="Graphviz DOT instead of JSON")
    c.add_argument("--require-faithful", action="store_true", help="fail when the repair step ran")
    c.add_argument("--allow-six", action="store_true", help="accept six colors (only GP(3,1) needs them)")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a JSON or DOT coloring file")
    v.add_argument("file")
    v.add_argument("--require-total", action="store_true", help="report uncolored edges too")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exact", help="star chromatic index by exhaustive search")
    e.add_argument("n", type=int)
    e.add_argument("k", type=int)
    e.add_argument("max_colors", type=int, nargs="?", default=7)
    e.add_argument("--budget", type=int, default=20_000_000, help="search node budget")
    e.set_defaults(func=cmd_exact)

    s = sub.add_parser("sweep", help="color a range of instances and write CSV")
    s.add_argument("--n-min", type=int, default=6)
    s.add_argument("--n-max", type=int, default=60)
    s.add_argument("--k", type=int, help="only this k")
    s.add_argument("--gcd-min", type=int, help="only gcd(n,k) at least this")
    s.add_argument("--gcd", type=int, help="only gcd(n,k) equal to this")
    s.add_argument("--workers", type=int, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    s.add_argument("--allow-six", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_sweep)

    x = sub.add_parser("export", help="write a coloring as JSON or DOT")
    x.add_argument("n", type=int, nargs="?")
    x.add_argument("k", type=int, nargs="?")
    x.add_argument("--input", help="convert this JSON or DOT file instead of coloring")
    x.add_argument("--format", choices=("json", "dot"), default="dot")
    x.add_argument("-o", "--output")
    x.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
