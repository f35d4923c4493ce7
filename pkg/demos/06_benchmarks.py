"""
Benchmarks across implementations
=================================

The same direct-style programs on replay, generic reflection and optimized
reflection, against hand-written indirect code.
"""

from fractions import Fraction

from thermocont.bench import BenchSpec, arith_parse, run_bench

for impl in ("indirect", "replay", "thermo", "thermo-opt"):
    rep = run_bench(BenchSpec("nqueens", impl, 8, trials=3))
    print(f"nqueens  {impl:<10} {rep.mean_seconds:.4f}s  {rep.result_summary}  {rep.result_digest}")

for impl in ("indirect", "replay", "thermo", "thermo-opt"):
    rep = run_bench(BenchSpec("intparse-local", impl, 10_000, bad_fraction=Fraction(1, 10)))
    print(f"intparse {impl:<10} {rep.mean_seconds:.4f}s  {rep.result_summary}")

# Prefix-ambiguous parsing: every prefix that is a full expression
print(arith_parse("12+3*(4+5)", "thermo"))
