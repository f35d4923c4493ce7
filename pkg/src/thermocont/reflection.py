"""Monadic reflection on top of thermometer continuations.

``reflect`` performs a monadic value's effect in direct style; ``reify``
turns a direct-style thunk back into a monadic value:

    reflect(m) = shift(lambda k: bind(m, k))
    reify(t)   = bind(reset(lambda: unit(embed(t()))), lambda u: unit(unbox(u)))

Three monads are provided: lists (nondeterminism), :class:`Just`/``None``
(failure) and state transformers ``s -> (a, s)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterable, TypeVar

from .control import Control
from .universal import embed, unbox

__all__ = [
    "Failure",
    "Just",
    "ListMonad",
    "MaybeMonad",
    "Monad",
    "Nondeterminism",
    "Reflected",
    "State",
    "StateListMonad",
    "StateMonad",
    "list_monad",
    "maybe_monad",
    "state_monad",
]

A = TypeVar("A")


class Monad:
    """``unit`` (the monadic return) and ``bind``."""

    name = "monad"

    def unit(self, x: Any) -> Any:
        raise NotImplementedError

    def bind(self, m: Any, f: Callable[[Any], Any]) -> Any:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{self.name} monad>"


class ListMonad(Monad):
    name = "list"

    def unit(self, x):
        return [x]

    def bind(self, m, f):
        out = []
        for x in m:
            out.extend(f(x))
        return out


@dataclass(frozen=True, slots=True)
class Just(Generic[A]):
    """A present value in the failure monad; absence is ``None``."""

    value: A


class MaybeMonad(Monad):
    name = "maybe"

    def unit(self, x):
        return Just(x)

    def bind(self, m, f):
        if m is None:
            return None
        return f(m.value)


class StateMonad(Monad):
    """State transformers ``s -> (a, s)``."""

    name = "state"

    def unit(self, x):
        return lambda s: (x, s)

    def bind(self, m, f):
        def run(s):
            x, s1 = m(s)
            return f(x)(s1)

        return run


class StateListMonad(Monad):
    """State and nondeterminism: ``s -> [(a, s)]``, the classic parser monad."""

    name = "state-list"

    def unit(self, x):
        return lambda s: [(x, s)]

    def bind(self, m, f):
        def run(s):
            out = []
            for x, s1 in m(s):
                out.extend(f(x)(s1))
            return out

        return run


list_monad = ListMonad()
maybe_monad = MaybeMonad()
state_monad = StateMonad()


class Reflected:
    """A monad made available in direct style.

    Every instance owns a fresh :class:`Control`, whose answer type is the
    monad applied to universal values.  Nested ``reify`` calls on the same
    instance are supported; interleaving reflections of *different*
    instances (layered effects) is experimental.
    """

    def __init__(self, monad: Monad) -> None:
        self.monad = monad
        self.control = Control(monad.name)

    def reflect(self, m: Any) -> Any:
        bind = self.monad.bind
        return self.control.shift(lambda k: bind(m, k))

    def reify(self, t: Callable[[], Any]) -> Any:
        monad = self.monad
        boxed = self.control.reset(lambda: monad.unit(embed(t())))
        return monad.bind(boxed, lambda u: monad.unit(unbox(u)))


class Nondeterminism(Reflected):
    """The list monad in direct style: ``choose`` and ``fail``."""

    def __init__(self) -> None:
        super().__init__(list_monad)

    def choose(self, xs: Iterable[Any]) -> Any:
        return self.reflect(list(xs))

    def fail(self) -> Any:
        return self.reflect([])


class Failure(Reflected):
    """The maybe monad in direct style."""

    def __init__(self) -> None:
        super().__init__(maybe_monad)

    def fail(self) -> Any:
        return self.reflect(None)

    def unwrap(self, m: Just | None) -> Any:
        return self.reflect(m)


class State(Reflected):
    """The state monad in direct style: ``get``, ``put`` and ``tick``.

    ``reify`` returns a state transformer; nothing after the first effect
    runs until that transformer is applied to an initial state.
    """

    def __init__(self) -> None:
        super().__init__(state_monad)

    def get(self) -> Any:
        return self.reflect(lambda s: (s, s))

    def put(self, n: Any) -> None:
        return self.reflect(lambda _: (None, n))

    def tick(self) -> None:
        return self.reflect(lambda s: (None, s + 1))
