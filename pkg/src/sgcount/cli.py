"""Command-line front door: count, list, verify, bench."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .core import (
    GenusBoundError,
    derive_conductor,
    derive_irreducibles,
    gap_set,
)
from .explorer import count, resolve_kernel, walk
from .parallel import parallel_count
from .verify import MAX_VERIFY_GENUS, run_suites

THREADS_ENV_VAR = "SGCOUNT_THREADS"
MAX_LIST_GENUS = 14
FORMATS = ("table", "csv", "json")


@dataclass(frozen=True)
class OutputRecord:
    genus: int
    count: int
    ratio: str  # "" for genus 0


def render_ratio(count: int, previous: int) -> str:
    """count/previous with exactly 5 decimal digits, truncated, not rounded."""
    scaled = count * 100_000 // previous
    return f"{scaled // 100_000}.{scaled % 100_000:05d}"


def output_records(counts: list) -> list[OutputRecord]:
    records = []
    for g, n in enumerate(counts):
        ratio = render_ratio(n, counts[g - 1]) if g > 0 else ""
        records.append(OutputRecord(genus=g, count=n, ratio=ratio))
    return records


def _emit_counts(records: list[OutputRecord], fmt: str, out) -> None:
    if fmt == "csv":
        print("genus,count,ratio", file=out)
        for r in records:
            print(f"{r.genus},{r.count},{r.ratio}", file=out)
    elif fmt == "table":
        width = max(len(str(r.count)) for r in records)
        for r in records:
            print(f"{r.genus:>4}  {r.count:>{width}}  {r.ratio}".rstrip(), file=out)
    else:
        payload = [
            {"genus": r.genus, "count": r.count, "ratio": r.ratio or None}
            for r in records
        ]
        print(json.dumps(payload), file=out)


def _resolve_threads(value) -> int:
    if value is None:
        value = os.environ.get(THREADS_ENV_VAR, "1")
    threads = int(value)
    if threads < 1:
        raise ValueError(f"thread count must be >= 1, got {threads}")
    return threads


def _counts_for(G: int, threads: int, kernel: str) -> list:
    if threads > 1:
        return parallel_count(G, threads, kernel=kernel)
    return count(G, kernel=kernel)


def cmd_count(args, out=None) -> int:
    threads = _resolve_threads(args.threads)
    counts = _counts_for(args.genus, threads, args.kernel)
    _emit_counts(output_records(counts), args.format, out or sys.stdout)
    return 0


def cmd_list(args, out=None) -> int:
    out = out or sys.stdout
    G = args.genus
    if not 0 <= G <= MAX_LIST_GENUS:
        raise ValueError(f"listing bound must be in [0, {MAX_LIST_GENUS}]")
    rows = []

    def describe(S):
        if S.g > G:
            return
        rows.append(
            (
                S.g,
                derive_conductor(S.delta),
                S.m,
                sorted(derive_irreducibles(S.delta)),
                sorted(gap_set(S)),
            )
        )

    # a bound of 0 would make the table too short to expose the root's
    # generator 1, so walk one layer deeper and filter
    walk(max(G, 1), describe)
    if args.format == "csv":
        print("genus,conductor,multiplicity,generators,gaps", file=out)
        for g, c, m, gens, gaps in rows:
            gens_s = " ".join(map(str, gens))
            gaps_s = " ".join(map(str, gaps))
            print(f"{g},{c},{m},{gens_s},{gaps_s}", file=out)
    elif args.format == "table":
        for g, c, m, gens, gaps in rows:
            gens_s = ",".join(map(str, gens))
            gaps_s = ",".join(map(str, gaps)) or "-"
            print(f"{g:>4} {c:>5} {m:>4}  <{gens_s}>  gaps={gaps_s}", file=out)
    else:
        payload = [
            {
                "genus": g,
                "conductor": c,
                "multiplicity": m,
                "generators": gens,
                "gaps": gaps,
            }
            for g, c, m, gens, gaps in rows
        ]
        print(json.dumps(payload), file=out)
    return 0


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    results = run_suites(args.genus)
    for r in results:
        status = "ok" if r.ok else "FAIL"
        line = f"{status:4} {r.name}"
        if not r.ok:
            line += f": {r.detail}"
        print(line, file=out)
    return 0 if all(r.ok for r in results) else 1


def bench_rows(G: int, threads: int, kernel: str):
    """Wall time and counts of a full run at every bound g <= G."""
    rows = []
    for g in range(G + 1):
        t0 = time.perf_counter()
        counts = _counts_for(g, threads, kernel)
        rows.append((g, time.perf_counter() - t0, counts))
    return rows


def cmd_bench(args, out=None) -> int:
    out = out or sys.stdout
    threads = _resolve_threads(args.threads)
    print(
        f"bench kernel={resolve_kernel(args.kernel)} threads={threads}",
        file=sys.stderr,
    )
    print("genus,seconds", file=out)
    for g, seconds, _ in bench_rows(args.genus, threads, args.kernel):
        print(f"{g},{seconds:.6f}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgcount",
        description="Count and enumerate numerical semigroups by genus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, kernel=True, threads=True, fmt=True):
        p.add_argument("--genus", type=int, required=True, help="genus bound G")
        if threads:
            p.add_argument(
                "--threads",
                type=int,
                default=None,
                help=f"worker count (default: ${THREADS_ENV_VAR} or 1)",
            )
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="csv")
        if kernel:
            p.add_argument(
                "--kernel", choices=("scalar", "vector", "auto"), default="auto"
            )

    p_count = sub.add_parser("count", help="semigroup counts per genus up to G")
    add_common(p_count)
    p_count.set_defaults(func=cmd_count)

    p_list = sub.add_parser("list", help="every semigroup of genus <= G")
    add_common(p_list, kernel=False, threads=False)
    p_list.set_defaults(func=cmd_list)

    p_verify = sub.add_parser("verify", help="run the oracle cross-checks")
    p_verify.add_argument(
        "--genus", type=int, default=10, help=f"bound, at most {MAX_VERIFY_GENUS}"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="wall time per genus bound")
    add_common(p_bench, fmt=False)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GenusBoundError, ValueError, OverflowError, RuntimeError) as exc:
        print(f"sgcount: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
