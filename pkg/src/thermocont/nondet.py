"""Replay-based nondeterminism.

``with_nondeterminism`` runs its body once per path of the computation
tree.  Each call to ``choose`` either follows the recorded future or, on a
fresh branch, picks the first element.  After a run finishes, the past is
advanced to the next unexplored path and becomes the future of the next
run.  No continuation is ever captured; the body is simply replayed, so it
must be free of side effects other than ``choose``.

    >>> with_nondeterminism(lambda: 2 * choose([1, 2, 3]))
    [2, 4, 6]
"""

from __future__ import annotations

from typing import Any, Callable, NamedTuple, Sequence, TypeVar

from .errors import ControlSignal, InternalInvariant, ReplayDivergence, UsedOutsideScope

__all__ = [
    "ChoiceIdx",
    "Empty",
    "NondetContext",
    "choose",
    "choose2",
    "next_idx",
    "next_path",
    "with_nondeterminism",
    "with_nondeterminism2",
]

T = TypeVar("T")


class ChoiceIdx(NamedTuple):
    """Position ``k`` in a choice list of length ``len``."""

    k: int
    len: int


class Empty(ControlSignal):
    """Raised by ``choose([])``; aborts the current path without a result."""


def next_idx(i: ChoiceIdx) -> ChoiceIdx | None:
    if i.k + 1 < i.len:
        return ChoiceIdx(i.k + 1, i.len)
    return None


def next_path(p: Sequence[ChoiceIdx]) -> list[ChoiceIdx]:
    """Advance a completed path index to the next unexplored one.

    ``p`` is in stack order (head is the most recent choice).  The deepest
    choice that still has alternatives is advanced and everything deeper is
    dropped.  An empty result means the tree is exhausted.

    >>> next_path([ChoiceIdx(0, 2), ChoiceIdx(0, 2)])
    [ChoiceIdx(k=1, len=2), ChoiceIdx(k=0, len=2)]
    """
    for depth, i in enumerate(p):
        nxt = next_idx(i)
        if nxt is not None:
            return [nxt, *p[depth + 1:]]
    return []


class NondetContext:
    """Past/future choice stacks plus a save-stack for nested runs.

    Stacks are Python lists with the head at the end, so ``past[-1]`` is the
    most recent choice and ``future[-1]`` the next one to replay.
    """

    def __init__(self) -> None:
        self.past: list[ChoiceIdx] = []
        self.future: list[ChoiceIdx] = []
        self.nest: list[tuple[list[ChoiceIdx], list[ChoiceIdx]]] = []
        self.active = 0

    def choose(self, xs: Sequence[T]) -> T:
        if not self.active:
            raise UsedOutsideScope("choose called outside with_nondeterminism")
        if not xs:
            raise Empty
        if self.future:
            i = self.future.pop()
            if i.len != len(xs) or i.k >= len(xs):
                raise ReplayDivergence(f"recorded {i} but choice list has length {len(xs)}")
        else:
            i = ChoiceIdx(0, len(xs))
        self.past.append(i)
        return xs[i.k]

    def with_nondeterminism(self, f: Callable[[], T]) -> list[T]:
        self.nest.append((self.past, self.future))
        self.past, self.future = [], []
        self.active += 1
        try:
            return self._loop(f)
        finally:
            self.active -= 1
            if not self.nest:
                raise InternalInvariant("nondeterminism nest underflow")
            self.past, self.future = self.nest.pop()

    def _loop(self, f: Callable[[], T]) -> list[T]:
        acc: list[T] = []
        while True:
            try:
                acc.append(f())
            except Empty:
                pass
            # head-first path index is exactly the future stack (head at end)
            self.future = next_path(self.past[::-1])
            self.past = []
            if not self.future:
                return acc

    def is_clean(self) -> bool:
        return not (self.past or self.future or self.nest or self.active)


_default = NondetContext()


def choose(xs: Sequence[T]) -> T:
    """``choose`` on the module-level default context."""
    return _default.choose(xs)


def with_nondeterminism(f: Callable[[], T]) -> list[T]:
    """``with_nondeterminism`` on the module-level default context."""
    return _default.with_nondeterminism(f)


def choose2(x1: Any, x2: Any, ctx: NondetContext | None = None) -> Any:
    return (ctx or _default).choose((x1, x2))


def with_nondeterminism2(f: Callable[[], T], ctx: NondetContext | None = None) -> list[T]:
    return (ctx or _default).with_nondeterminism(f)
