"""Benchmarks: n-queens, integer parsing with failure, prefix-ambiguous
arithmetic parsing, and the abstract-machine differential check."""

from .harness import BENCHES, BenchReport, BenchSpec, ImplMismatch, digest, run_bench
from .programs import IMPLS, arith_parse, arith_parse_oracle, intparse, nqueens

__all__ = [
    "BENCHES",
    "IMPLS",
    "BenchReport",
    "BenchSpec",
    "ImplMismatch",
    "arith_parse",
    "arith_parse_oracle",
    "digest",
    "intparse",
    "nqueens",
    "run_bench",
]
