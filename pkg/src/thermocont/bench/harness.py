"""Run a benchmark, time it, and cross-check its output against ``indirect``."""

from __future__ import annotations

import contextlib
import hashlib
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterator

from .. import machine
from . import programs

__all__ = [
    "BENCHES",
    "BenchReport",
    "BenchSpec",
    "ImplMismatch",
    "digest",
    "run_bench",
    "run_once",
]

BENCHES = ("nqueens", "intparse-glob", "intparse-local", "arith-parse", "verify-machines")

VALID_IMPLS = {
    "nqueens": programs.IMPLS,
    "intparse-glob": programs.IMPLS,
    "intparse-local": programs.IMPLS,
    "arith-parse": ("indirect", "replay", "thermo"),
    "verify-machines": programs.IMPLS,
}


class ImplMismatch(AssertionError):
    """An implementation's output digest differs from the indirect oracle's."""


@dataclass(frozen=True)
class BenchSpec:
    bench: str
    impl: str = "indirect"
    size: int = 8
    trials: int = 1
    seed: int = 0
    bad_fraction: Fraction | None = None
    bad_middle: bool = False
    max_size: int = 12

    def __post_init__(self) -> None:
        if self.bench not in BENCHES:
            raise ValueError(f"unknown bench {self.bench!r}; expected one of {BENCHES}")
        if self.impl not in VALID_IMPLS[self.bench]:
            raise ValueError(f"impl {self.impl!r} is not available for {self.bench}")
        if self.size < 1 or self.trials < 1:
            raise ValueError("size and trials must be positive")
        if self.bad_fraction is not None and self.bench != "intparse-local":
            raise ValueError("bad_fraction only applies to intparse-local")


@dataclass
class BenchReport:
    spec: BenchSpec
    seconds: list[float] = field(default_factory=list)
    result_digest: str = ""
    result_summary: str = ""
    oracle_digest: str | None = None

    @property
    def agrees(self) -> bool:
        return self.oracle_digest is None or self.oracle_digest == self.result_digest

    @property
    def mean_seconds(self) -> float:
        return sum(self.seconds) / len(self.seconds) if self.seconds else 0.0


def digest(value: Any) -> str:
    return hashlib.sha256(repr(value).encode()).hexdigest()[:16]


@contextlib.contextmanager
def _recursion_limit(limit: int) -> Iterator[None]:
    # Generic reflection nests one replay per effect along a path.
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _workload(spec: BenchSpec, impl: str) -> Callable[[], Any]:
    if spec.bench == "nqueens":
        return lambda: programs.nqueens(spec.size, impl)
    if spec.bench == "intparse-glob":
        data = programs.gen_intparse_input(spec.size, spec.seed, bad_middle=spec.bad_middle)
        return lambda: programs.intparse(data, "glob", impl)
    if spec.bench == "intparse-local":
        frac = spec.bad_fraction if spec.bad_fraction is not None else Fraction(1, 10)
        data = programs.gen_intparse_input(spec.size, spec.seed, bad_fraction=frac)
        return lambda: programs.intparse(data, "local", impl)
    if spec.bench == "arith-parse":
        text = programs.gen_arith_expr(spec.size, spec.seed)
        return lambda: programs.arith_parse(text, impl)
    terms = [machine.gen_term(spec.seed + i, spec.max_size) for i in range(spec.size)]
    return lambda: [machine.differential_check(t) for t in terms]


def _summary(spec: BenchSpec, value: Any) -> str:
    if spec.bench == "nqueens":
        return f"{len(value)} solutions"
    if spec.bench == "intparse-glob":
        return "failure" if value is None else f"sum={value.value}"
    if spec.bench == "intparse-local":
        return f"sum={value}"
    if spec.bench == "arith-parse":
        return f"{len(value)} prefix parses"
    return f"{sum(value)}/{len(value)} agree"


def run_once(spec: BenchSpec, impl: str | None = None) -> Any:
    with _recursion_limit(20_000):
        return _workload(spec, impl or spec.impl)()


def run_bench(spec: BenchSpec, timing: bool = True, check: bool = True) -> BenchReport:
    """Run ``spec.trials`` timed trials and cross-check against ``indirect``.

    Raises :class:`ImplMismatch` when the digests differ, or, for
    ``verify-machines``, when any term makes the two machines disagree.
    """
    report = BenchReport(spec)
    work = _workload(spec, spec.impl)
    value = None
    with _recursion_limit(20_000):
        for _ in range(spec.trials if timing else 1):
            start = time.perf_counter()
            value = work()
            report.seconds.append(time.perf_counter() - start)
        report.result_digest = digest(value)
        report.result_summary = _summary(spec, value)
        if check and spec.bench != "verify-machines" and spec.impl != "indirect":
            report.oracle_digest = digest(_workload(spec, "indirect")())
    if not timing:
        report.seconds = []
    if spec.bench == "verify-machines" and not all(value):
        raise ImplMismatch(f"machines disagree: {report.result_summary}")
    if not report.agrees:
        raise ImplMismatch(
            f"{spec.bench}/{spec.impl}/n={spec.size}: digest {report.result_digest} "
            f"!= indirect {report.oracle_digest}"
        )
    return report
