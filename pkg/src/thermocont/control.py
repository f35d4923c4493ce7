"""Delimited control (``shift``/``reset``) by replay.

A captured continuation is a *thermometer continuation*: the reset body
together with the list of frames that steers a replay of that body to the
point where ``shift`` was called.  Invoking the continuation with ``v``
replays the body with that frame list plus ``Return(v)`` as its future.

Each :class:`Control` instance is the state for one answer type, so
different answer types simply use different instances.

    >>> c = Control()
    >>> c.reset(lambda: 2 * c.shift(lambda k: 1 + k(5)))
    11
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence, Union

from .errors import ControlSignal, InternalInvariant, MissingReset, ReplayDivergence
from .universal import UniversalValue, embed, project

__all__ = ["Control", "Enter", "Frame", "Return"]


@dataclass(frozen=True, slots=True)
class Return:
    """Make the next ``shift`` return ``value`` instead of running its body."""

    value: UniversalValue
    site: Any = None


@dataclass(frozen=True, slots=True)
class Enter:
    """Make the next ``shift`` run its body."""

    site: Any = None


Frame = Union[Return, Enter]


class _Done(ControlSignal):
    def __init__(self, owner: "Control", result: Any) -> None:
        super().__init__()
        self.owner = owner
        self.result = result


def _site(body: Callable) -> Any:
    return getattr(body, "__code__", None)


def _raise_unset() -> Any:
    raise MissingReset("no reset body is active")


class Control:
    """Replay state for ``shift``/``reset`` at one answer type.

    ``past`` and ``future`` are frame stacks (head at the end of the list);
    ``nest`` saves the enclosing ``(cur_expr, past, future)`` triple for
    every active ``run_with_future``.
    """

    def __init__(self, name: str | None = None) -> None:
        self.name = name
        self.cur_expr: Callable[[], Any] = _raise_unset
        self.past: list[Frame] = []
        self.future: list[Frame] = []
        self.nest: list[tuple[Callable[[], Any], list[Frame], list[Frame]]] = []

    def __repr__(self) -> str:
        return f"Control({self.name!r}, depth={len(self.nest)})"

    def run_with_future(self, f: Callable[[], Any], future: Sequence[Frame]) -> Any:
        """Run ``f`` with ``future`` as the frames to replay, as a new delimiter."""
        self.nest.append((self.cur_expr, self.past, self.future))
        self.cur_expr = f
        self.past = []
        self.future = list(reversed(future))
        try:
            try:
                result = f()
            except _Done as done:
                if done.owner is not self:
                    raise
                result = done.result
            if self.future:
                raise ReplayDivergence(
                    f"replay finished with {len(self.future)} unconsumed frame(s)"
                )
            return result
        finally:
            if not self.nest:
                raise InternalInvariant("reset nest underflow")
            self.cur_expr, self.past, self.future = self.nest.pop()

    def reset(self, f: Callable[[], Any]) -> Any:
        return self.run_with_future(f, ())

    def shift(self, body: Callable[[Callable[[Any], Any]], Any], expect: Any = None) -> Any:
        """Capture the continuation up to the nearest ``reset`` and pass it to ``body``.

        When the replay future commands a return, the recorded value is
        returned instead, projected at ``expect`` if one is given.
        """
        if not self.nest:
            raise MissingReset("shift called outside reset")
        site = _site(body)
        frame = self.future.pop() if self.future else None
        if isinstance(frame, Return):
            self._check_site(frame.site, site)
            self.past.append(frame)
            if expect is None:
                return frame.value.payload
            return project(frame.value, expect)
        if frame is not None:
            self._check_site(frame.site, site)

        new_future = list(self.past)
        our_expr = self.cur_expr

        def k(v: Any) -> Any:
            return self.run_with_future(our_expr, [*new_future, Return(embed(v), site)])

        self.past.append(Enter(site))
        raise _Done(self, body(k))

    @staticmethod
    def _check_site(recorded: Any, actual: Any) -> None:
        if recorded is not None and actual is not None and recorded is not actual:
            raise ReplayDivergence("replay reached a different shift than the one recorded")

    def snapshot(self) -> tuple[tuple[Frame, ...], tuple[Frame, ...], int]:
        return tuple(self.past), tuple(self.future), len(self.nest)

    def is_clean(self) -> bool:
        return not (self.past or self.future or self.nest) and self.cur_expr is _raise_unset
