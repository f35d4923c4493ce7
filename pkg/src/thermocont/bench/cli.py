"""Command-line entry point: ``python -m thermocont.bench``.

    python -m thermocont.bench --bench nqueens --impl replay --n 8 --trials 3
    python -m thermocont.bench --bench verify-machines --n 1000 --max-size 12
    python -m thermocont.bench --bench intparse-local --impl thermo --n 10000 \\
        --bad-fraction 1/10 --format csv

Exit status is 1 when an implementation disagrees with the indirect one
or when the two abstract machines disagree on some term.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from .. import machine
from .harness import BENCHES, VALID_IMPLS, BenchReport, BenchSpec, ImplMismatch, run_bench

CSV_COLUMNS = ("bench", "impl", "n", "trial", "seconds", "result_digest", "result_summary")


def _fraction(text: str) -> Fraction:
    try:
        frac = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}")
    if not 0 <= frac <= 1:
        raise argparse.ArgumentTypeError("bad fraction must lie in [0, 1]")
    return frac


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="python -m thermocont.bench",
        description="Benchmarks for replay-based control operators.",
    )
    p.add_argument("--bench", required=True, choices=BENCHES)
    p.add_argument("--impl", default="all",
                   help="indirect, replay, thermo, thermo-opt, or all (default)")
    p.add_argument("--n", type=int, default=8,
                   help="board size, entry count, leaf count, or term count")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bad-fraction", type=_fraction, default=None,
                   help="fraction of malformed entries for intparse-local, e.g. 1/10")
    p.add_argument("--bad-middle", action="store_true",
                   help="intparse-glob: make the middle entry malformed")
    p.add_argument("--max-size", type=int, default=12, help="verify-machines: term size bound")
    p.add_argument("--terms", type=argparse.FileType("r"), default=None,
                   help="verify-machines: check terms from a file, one per line")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("--check", action="store_true",
                   help="cross-validate digests only, without timing")
    return p


def _rows(report: BenchReport) -> list[tuple]:
    s = report.spec
    if not report.seconds:
        return [(s.bench, s.impl, s.size, 0, "", report.result_digest, report.result_summary)]
    return [(s.bench, s.impl, s.size, i + 1, f"{sec:.6f}", report.result_digest,
             report.result_summary) for i, sec in enumerate(report.seconds)]


def _emit(rows: list[tuple], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(rows)
        return
    table = [CSV_COLUMNS, *[tuple(str(c) for c in r) for r in rows]]
    widths = [max(len(str(r[i])) for r in table) for i in range(len(CSV_COLUMNS))]
    for r in table:
        out.write("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _check_term_file(f: TextIO, out: TextIO) -> int:
    failures = 0
    terms = machine.parse_terms(f.read())
    for t in terms:
        cont, hist = machine.run_cont(t), machine.run_hist(t)
        ok = cont == hist
        failures += not ok
        out.write(f"{'ok  ' if ok else 'FAIL'} {machine.format_results(cont)} "
                  f"{machine.format_results(hist)} {machine.format_term(t)}\n")
    out.write(f"{len(terms) - failures}/{len(terms)} agree\n")
    return 1 if failures else 0


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.terms is not None:
        return _check_term_file(args.terms, out)

    if args.bench == "verify-machines":
        impls = ["indirect"]
    elif args.impl == "all":
        impls = list(VALID_IMPLS[args.bench])
    else:
        impls = [args.impl]

    rows, status = [], 0
    for impl in impls:
        try:
            spec = BenchSpec(args.bench, impl, args.n, args.trials, args.seed,
                             args.bad_fraction, args.bad_middle, args.max_size)
            report = run_bench(spec, timing=not args.check)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        except ImplMismatch as exc:
            print(f"MISMATCH: {exc}", file=sys.stderr)
            status = 1
            continue
        rows.extend(_rows(report))
    _emit(rows, args.format, out)
    return status
