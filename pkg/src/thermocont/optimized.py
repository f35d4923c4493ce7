"""Monadic reflection with continuation invocation at the top of the stack.

Two optimizations over :mod:`thermocont.reflection`, both requiring the
monad's bind to be written in continuation-passing style with two
consumers::

    cps_bind(m, first_use, later_use, done)

``first_use`` receives the first value extracted from ``m`` and
``later_use`` every subsequent one; each consumer gets the value and an
aggregation continuation ``d`` to call with its monadic result.  ``done``
receives the aggregated result.  A well-behaved ``cps_bind`` tail-calls
its consumers.

* **Direct return.** ``first_use`` makes ``reflect`` simply return the
  value, so the body keeps running instead of being replayed.
* **Invoke at top level.** ``later_use`` raises an internal signal that
  unwinds to the driver loop in :meth:`OptimizedReflected.reify`, which
  replays the body from there.  Live stack depth stays at one body
  execution.

The aggregation continuations run at the driver's top level as well.
Continuations must not escape their ``reify``: the state monad's bind
stores them inside the returned transformer, which is why it is not
supported here (see :data:`cps_state_monad`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .errors import ControlSignal, EscapedContinuation, MissingReset, ReplayDivergence
from .reflection import Just
from .universal import UniversalValue, embed

__all__ = [
    "CpsListMonad",
    "CpsMaybeMonad",
    "CpsMonad",
    "CpsStateMonad",
    "OptFailure",
    "OptNondeterminism",
    "OptimizedReflected",
    "ReplayStats",
    "cps_list_bind",
    "cps_list_monad",
    "cps_maybe_monad",
    "cps_state_monad",
]

Consumer = Callable[[Any, Callable[[Any], Any]], Any]


def cps_list_bind(xs: Sequence[Any], first_use: Consumer, later_use: Consumer,
                  done: Callable[[list], Any]) -> Any:
    """CPS list bind: results of each element are appended left to right.

    >>> cps_list_bind([2, 3], lambda x, d: d([10 * x]), lambda x, d: d([10 * x]), list)
    [20, 30]
    """

    def go(i: int, use: Consumer, d: Callable[[list], Any]) -> Any:
        if i == len(xs):
            return d([])
        return use(xs[i], lambda a: go(i + 1, later_use, lambda b: d(a + b)))

    return go(0, first_use, done)


class CpsMonad:
    name = "cps-monad"

    def unit(self, x: Any) -> Any:
        raise NotImplementedError

    def cps_bind(self, m: Any, first_use: Consumer, later_use: Consumer,
                 done: Callable[[Any], Any]) -> Any:
        raise NotImplementedError

    def bind(self, m: Any, f: Callable[[Any], Any]) -> Any:
        """Ordinary bind recovered from the CPS one."""
        use = lambda x, d: d(f(x))  # noqa: E731
        return self.cps_bind(m, use, use, lambda r: r)

    def __repr__(self) -> str:
        return f"<{self.name} monad>"


class CpsListMonad(CpsMonad):
    name = "cps-list"

    def unit(self, x):
        return [x]

    def cps_bind(self, m, first_use, later_use, done):
        return cps_list_bind(m, first_use, later_use, done)


class CpsMaybeMonad(CpsMonad):
    name = "cps-maybe"

    def unit(self, x):
        return Just(x)

    def cps_bind(self, m, first_use, later_use, done):
        if m is None:
            return done(None)
        return first_use(m.value, done)


class CpsStateMonad(CpsMonad):
    """State transformers in CPS form.

    Its bind hands ``done`` a transformer that calls the continuation only
    when applied, i.e. after ``reify`` has returned.  Under
    :class:`OptimizedReflected` that raises :class:`EscapedContinuation`.
    """

    name = "cps-state"

    def unit(self, x):
        return lambda s: (x, s)

    def cps_bind(self, m, first_use, later_use, done):
        def run(s):
            x, s1 = m(s)
            return later_use(x, lambda r: r)(s1)

        return done(run)


cps_list_monad = CpsListMonad()
cps_maybe_monad = CpsMaybeMonad()
cps_state_monad = CpsStateMonad()


@dataclass
class ReplayStats:
    """Counters accumulated over the lifetime of an instance."""

    runs: int = 0
    invokes: int = 0
    direct_returns: int = 0


class _Driver:
    __slots__ = ("live",)

    def __init__(self) -> None:
        self.live = True


class _Invoke(ControlSignal):
    def __init__(self, driver: _Driver, future: list[UniversalValue], consumer: Callable) -> None:
        super().__init__()
        self.driver = driver
        self.future = future
        self.consumer = consumer


class _Finished(ControlSignal):
    def __init__(self, driver: _Driver, result: Any) -> None:
        super().__init__()
        self.driver = driver
        self.result = result


class _DirectReturn:
    __slots__ = ("value", "consumer")

    def __init__(self, value: Any, consumer: Callable) -> None:
        self.value = value
        self.consumer = consumer


def _identity(m: Any) -> Any:
    return m


class OptimizedReflected:
    """Direct-style access to a :class:`CpsMonad`, replaying at top level.

    All recorded frames are return values, so the past and future are
    plain stacks of boxed values.
    """

    def __init__(self, monad: CpsMonad) -> None:
        self.monad = monad
        self.stats = ReplayStats()
        self.past: list[UniversalValue] = []
        self.future: list[UniversalValue] = []
        self._driver: _Driver | None = None
        self._consumer: Callable[[Any], Any] = _identity
        self.nest: list[tuple] = []

    def reflect(self, m: Any) -> Any:
        driver = self._driver
        if driver is None:
            raise MissingReset("reflect called outside reify")
        if self.future:
            u = self.future.pop()
            self.past.append(u)
            return u.payload

        captured = list(self.past)
        binding = True
        first_taken = False
        stats = self.stats

        def later_use(x: Any, d: Callable[[Any], Any]) -> Any:
            if not driver.live:
                raise EscapedContinuation("continuation invoked after its reify returned")
            stats.invokes += 1
            raise _Invoke(driver, [*captured, embed(x)], d)

        def first_use(x: Any, d: Callable[[Any], Any]) -> Any:
            nonlocal first_taken
            if binding and not first_taken:
                first_taken = True
                return _DirectReturn(x, d)
            return later_use(x, d)

        out = self.monad.cps_bind(m, first_use, later_use, self._consumer)
        binding = False
        if isinstance(out, _DirectReturn):
            stats.direct_returns += 1
            self.past.append(embed(out.value))
            self._consumer = out.consumer
            return out.value
        raise _Finished(driver, out)

    def reify(self, t: Callable[[], Any]) -> Any:
        driver = _Driver()
        self.nest.append((self._driver, self.past, self.future, self._consumer))
        self._driver = driver
        future: list[UniversalValue] = []
        consumer: Callable[[Any], Any] = _identity
        try:
            while True:
                self.past = []
                self.future = future[::-1]
                self._consumer = consumer
                self.stats.runs += 1
                try:
                    value = t()
                    if self.future:
                        raise ReplayDivergence(
                            f"replay finished with {len(self.future)} unconsumed frame(s)"
                        )
                    return self._consumer(self.monad.unit(value))
                except _Invoke as inv:
                    if inv.driver is not driver:
                        raise
                    future, consumer = inv.future, inv.consumer
                except _Finished as fin:
                    if fin.driver is not driver:
                        raise
                    return fin.result
        finally:
            driver.live = False
            self._driver, self.past, self.future, self._consumer = self.nest.pop()

    def is_clean(self) -> bool:
        return not (self.past or self.future or self.nest) and self._driver is None


class OptNondeterminism(OptimizedReflected):
    def __init__(self) -> None:
        super().__init__(cps_list_monad)

    def choose(self, xs: Sequence[Any]) -> Any:
        return self.reflect(list(xs))

    def fail(self) -> Any:
        return self.reflect([])


class OptFailure(OptimizedReflected):
    def __init__(self) -> None:
        super().__init__(cps_maybe_monad)

    def fail(self) -> Any:
        return self.reflect(None)

    def unwrap(self, m: Just | None) -> Any:
        return self.reflect(m)
