"""Batch command-line front end.

    nonrascoe coeffs sigma2[l=0] --order 10
    nonrascoe enumerate rr[l=0] 9 --by-rank
    nonrascoe verify all --order 200
    nonrascoe scan conjecture1 --nmax 100000

Exit codes: 0 all pass, 1 a check failed, 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import __version__
from . import partition_oracle as oracle
from .genfun import IdSyntaxError, evaluate, parse_id, parse_partition_spec
from .identity_lab import (
    CATALOG,
    FINITE_IDENTITIES,
    IdentityReport,
    PoleError,
    UnknownIdentityError,
    beck_scan,
    check_finite_identity,
    check_series_identity,
    convolution_congruences,
    finite_grid,
    j5_convolution,
    parity_scan,
    reports_to_csv,
    reports_to_jsonl,
    scan_conjecture1,
    scan_lcong,
)
from .ring_series import parse_ring

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
DEFAULT_MAX_ORDER = 200_000
ENV_THREADS = "NONRASCOE_THREADS"
ENV_OUTPUT_DIR = "NONRASCOE_OUTPUT_DIR"
SCANS = ("conjecture1", "parity", "lcong", "convolution", "beck")


class UsageError(ValueError):
    pass


class GuardError(Exception):
    pass


# -- argument parsing ----------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _param(text: str) -> tuple[str, int | Fraction | str]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError("expected key=value")
    try:
        return key, _number(value)
    except ValueError:
        return key, value


def _number(text: str) -> int | Fraction:
    v = Fraction(text)
    return v.numerator if v.denominator == 1 else v


def _points(text: str) -> list[Fraction]:
    try:
        return [Fraction(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--output", help="write here instead of stdout (relative paths go under $%s)" % ENV_OUTPUT_DIR)
    common.add_argument("--threads", type=_positive, default=None,
                        help=f"worker threads (default ${ENV_THREADS} or 1)")
    common.add_argument("--seed", type=int, default=0, help="seed for finite-identity sample points")
    common.add_argument("--timings", action="store_true", help="include wall-clock ms in reports")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, help="series order guard")
    common.add_argument("--weight-limit", type=int, default=oracle.DEFAULT_WEIGHT_LIMIT,
                        help="exhaustive enumeration guard")

    p = argparse.ArgumentParser(prog="nonrascoe", description="Partition generating functions and q-identities.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeffs", parents=[common], help="coefficients of a named series")
    c.add_argument("id", help='series id, e.g. "sigma2[l=0]"')
    c.add_argument("--order", type=_positive, required=True)
    c.add_argument("--ring", default=None, help="int, rat or modN (default int)")

    e = sub.add_parser("enumerate", parents=[common], help="list partitions in a class")
    e.add_argument("spec", help='partition class, e.g. "rascoe[l=0]"')
    e.add_argument("n", type=int)
    e.add_argument("--by-rank", action="store_true", help="rank histogram instead of the listing")

    v = sub.add_parser("verify", parents=[common], help="check identities")
    v.add_argument("ids", nargs="+", help='identity ids or "all"')
    v.add_argument("--order", type=_positive, default=200)
    v.add_argument("--ring", default=None)
    v.add_argument("--n", type=int, default=None, help="n for finite identities")
    v.add_argument("--l", type=int, default=None)
    v.add_argument("--param", type=_param, action="append", default=[], metavar="KEY=VALUE")
    v.add_argument("--points", type=_points, default=None, help="comma-separated rationals")
    v.add_argument("--count", type=_positive, default=5, help="sample points per finite check")
    v.add_argument("--finite-max-n", type=int, default=12, help='grid bound for "all"')

    s = sub.add_parser("scan", parents=[common], help="long-range congruence scans")
    s.add_argument("name", choices=SCANS)
    s.add_argument("--nmax", type=int, default=None)
    s.add_argument("--kmax", type=int, default=None)
    s.add_argument("--kmax-j5", type=int, default=50)
    s.add_argument("--l", type=int, default=None)
    s.add_argument("--order", type=int, default=300, help="order for the lcong scan")
    s.add_argument("--convention", type=int, choices=(0, 1), default=0,
                   help="lower summation limit of the mock theta series")
    return p


# -- output ----------------------------------------------------------------------------

class Sink:
    """Single serialized writer for one command's output."""

    def __init__(self, path: str | None):
        if path is not None:
            base = os.environ.get(ENV_OUTPUT_DIR)
            target = Path(path)
            if base and not target.is_absolute():
                target = Path(base) / target
            self.path = target
        else:
            self.path = None

    def write(self, text: str) -> None:
        if self.path is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(text, encoding="utf-8")


def _csv(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _report_text(r: IdentityReport) -> str:
    params = ",".join(f"{k}={v}" for k, v in r.params.items())
    line = f"{r.status.upper()} {r.id}[{params}] {r.mode} {json.dumps(r.checked, sort_keys=True)}"
    if r.witness:
        line += f" witness={json.dumps(r.witness, sort_keys=True)}"
    if r.ms is not None:
        line += f" {r.ms:.1f}ms"
    out = [line]
    if r.id == "conjecture1":
        d = r.details
        cmp = d["published_comparison"]
        out.append(f"  eligible k: {d['eligible_k']}  violations: {len(d['violations'])}")
        out.append(f"  exceptional m: {d['exceptional_m']}")
        out.append(f"  vs published (m in {cmp['m_range']}): found only {cmp['found_only']}, "
                   f"published only {cmp['published_only']}")
    return "\n".join(out) + "\n"


def render_reports(reports: list[IdentityReport], fmt: str, timings: bool) -> str:
    if not timings:
        reports = [replace(r, ms=None) for r in reports]
    if fmt == "json":
        return reports_to_jsonl(reports, timings)
    if fmt == "csv":
        return reports_to_csv(reports, timings)
    return "".join(_report_text(r) for r in reports)


def _run(jobs: list[Callable[[], IdentityReport]], threads: int) -> list[IdentityReport]:
    """Run independent checks; results keep job order whatever the thread count."""
    if threads == 1 or len(jobs) < 2:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda job: job(), jobs))


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get(ENV_THREADS)
    if env is None:
        return 1
    try:
        n = int(env)
    except ValueError:
        raise UsageError(f"${ENV_THREADS} must be an integer") from None
    if n < 1:
        raise UsageError(f"${ENV_THREADS} must be >= 1")
    return n


def _guard_order(order: int, args) -> None:
    if order > args.max_order:
        raise GuardError(f"order {order} exceeds the guard {args.max_order}; pass --max-order to allow it")


# -- commands ------------------------------------------------------------------------

def cmd_coeffs(args, sink: Sink) -> int:
    _guard_order(args.order, args)
    ring = parse_ring(args.ring) if args.ring else None
    gid = parse_id(args.id)
    table = evaluate(gid, args.order, ring)
    r = table.series.ring
    rows = [(e, r.to_str(v)) for e, v in table.rows()]
    if args.format == "json":
        sink.write(_dumps({
            "id": str(gid), "order": args.order, "ring": str(r), "variable": table.variable,
            "first_exponent": table.first_exponent, "coefficients": [v for _, v in rows],
        }))
    elif args.format == "csv":
        sink.write(_csv([list(row) for row in rows], ["n", "coefficient"]))
    else:
        sink.write(f"# {gid} ring={r} from {table.variable}^{table.first_exponent}\n"
                   + ", ".join(v for _, v in rows) + "\n")
    return EXIT_PASS


def _show(parts: tuple[int, ...]) -> str:
    return "+".join(map(str, parts)) if parts else "()"


def cmd_enumerate(args, sink: Sink) -> int:
    spec = parse_partition_spec(args.spec)
    parts = oracle.enumerate_partitions(args.n, spec, args.weight_limit)
    if args.by_rank:
        hist: dict[int, int] = {}
        for p in parts:
            hist[p.rank] = hist.get(p.rank, 0) + 1
        ranks = sorted(hist.items())
        parity = {"even": sum(c for k, c in ranks if k % 2 == 0), "odd": sum(c for k, c in ranks if k % 2)}
        if args.format == "json":
            sink.write(_dumps({"spec": args.spec, "n": args.n, "count": len(parts),
                               "rank_histogram": {str(k): c for k, c in ranks}, "parity": parity}))
        elif args.format == "csv":
            sink.write(_csv([[k, c] for k, c in ranks], ["rank", "count"]))
        else:
            lines = [f"rank {k}: {c}" for k, c in ranks]
            lines.append(f"even: {parity['even']}  odd: {parity['odd']}  total: {len(parts)}")
            sink.write("\n".join(lines) + "\n")
        return EXIT_PASS
    if args.format == "json":
        sink.write(_dumps({"spec": args.spec, "n": args.n, "count": len(parts),
                           "partitions": [list(p.parts) for p in parts]}))
    elif args.format == "csv":
        sink.write(_csv([[_show(p.parts)] for p in parts], ["partition"]))
    else:
        sink.write("".join(_show(p.parts) + "\n" for p in parts) + f"count: {len(parts)}\n")
    return EXIT_PASS


def _series_job(identity: str, order: int, ring, params: dict):
    return lambda: check_series_identity(identity, order, ring, **params)


def _finite_job(identity: str, n: int, ell: int, points, seed: int, count: int, extras: dict):
    return lambda: check_finite_identity(identity, n, ell, points, seed=seed, count=count, extras=extras)


def _verify_jobs(args) -> list[Callable[[], IdentityReport]]:
    ring = parse_ring(args.ring) if args.ring else None
    extra = dict(args.param)
    jobs = []
    if args.ids == ["all"]:
        for identity, entry in CATALOG.items():
            for params in entry.grid:
                jobs.append(_series_job(identity, args.order, ring, params))
        for identity, n, ell in finite_grid(args.finite_max_n):
            jobs.append(_finite_job(identity, n, ell, None, args.seed, args.count, {}))
        return jobs
    for identity in args.ids:
        if identity in CATALOG:
            params = dict(extra)
            if args.l is not None:
                params["l"] = args.l
            jobs.append(_series_job(identity, args.order, ring, params))
        elif identity in FINITE_IDENTITIES:
            if args.n is None:
                raise UsageError(f"{identity} needs --n")
            unknown = set(extra) - set(FINITE_IDENTITIES[identity].extras)
            if unknown:
                raise UsageError(f"{identity} has no parameter(s) {sorted(unknown)}")
            jobs.append(_finite_job(identity, args.n, args.l or 0, args.points, args.seed, args.count, extra))
        else:
            raise UnknownIdentityError(identity)
    return jobs


def cmd_verify(args, sink: Sink) -> int:
    _guard_order(args.order, args)
    reports = _run(_verify_jobs(args), _threads(args))
    sink.write(render_reports(reports, args.format, args.timings))
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def _scan_jobs(args) -> list[Callable[[], IdentityReport]]:
    name = args.name
    if name == "conjecture1":
        nmax = 100_000 if args.nmax is None else args.nmax
        _guard_order(nmax, args)
        return [lambda: scan_conjecture1(nmax).report()]
    if name == "parity":
        nmax = 2000 if args.nmax is None else args.nmax
        _guard_order(nmax, args)
        ells = (0, 1, 2) if args.l is None else (args.l,)
        return [(lambda ell=ell: parity_scan(ell, nmax)) for ell in ells]
    if name == "lcong":
        _guard_order(args.order, args)
        ells = range(7) if args.l is None else (args.l,)
        return [(lambda ell=ell: scan_lcong(ell, args.order)) for ell in ells]
    if name == "convolution":
        kmax = 500 if args.kmax is None else args.kmax
        _guard_order(kmax, args)
        _guard_order(40 * args.kmax_j5, args)
        return [lambda: convolution_congruences(kmax, args.convention), lambda: j5_convolution(args.kmax_j5)]
    nmax = 20 if args.nmax is None else args.nmax
    if 2 * nmax + 2 > args.weight_limit:
        raise oracle.OracleGuardError(
            f"2*nmax+2 = {2 * nmax + 2} exceeds the weight limit {args.weight_limit}; pass --weight-limit")
    return [lambda: beck_scan(nmax, args.weight_limit)]


def cmd_scan(args, sink: Sink) -> int:
    reports = _run(_scan_jobs(args), _threads(args))
    sink.write(render_reports(reports, args.format, args.timings))
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


COMMANDS = {"coeffs": cmd_coeffs, "enumerate": cmd_enumerate, "verify": cmd_verify, "scan": cmd_scan}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return COMMANDS[args.command](args, Sink(args.output))
    except (GuardError, oracle.OracleGuardError) as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except PoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except UnknownIdentityError as exc:
        print(f"error: unknown identity {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    except (IdSyntaxError, UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
