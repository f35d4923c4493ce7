"""A checked universal type.

Frames recorded during a replay hold values of arbitrary types.  They are
boxed in a :class:`UniversalValue` whose tag is the value's type (or an
explicitly given type such as ``list[int]``).  The tag is derived from the
type itself, never freshly allocated, so a box built on one replay can be
opened on the next.
"""

from __future__ import annotations

import typing
from dataclasses import dataclass
from typing import Any

from .errors import TypeMismatch

__all__ = ["UniversalValue", "embed", "project", "unbox"]


@dataclass(frozen=True, slots=True)
class UniversalValue:
    payload: Any
    type_tag: Any

    def __repr__(self) -> str:
        return f"UniversalValue({self.payload!r}: {_type_name(self.type_tag)})"


def _type_name(tp: Any) -> str:
    return getattr(tp, "__qualname__", None) or repr(tp)


def embed(x: Any, tp: Any = None) -> UniversalValue:
    """Box ``x``, tagging it with ``tp`` or, by default, ``type(x)``."""
    if tp is None:
        tp = type(x)
    elif typing.get_origin(tp) is None and isinstance(tp, type) and not isinstance(x, tp):
        raise TypeMismatch(f"cannot embed {x!r} at type {_type_name(tp)}")
    return UniversalValue(x, tp)


def _matches(tag: Any, requested: Any) -> bool:
    if tag == requested:
        return True
    # A value tagged list[int] may be opened as plain list, not the reverse.
    origin = typing.get_origin(tag)
    return origin is not None and origin == requested


def project(u: UniversalValue, tp: Any) -> Any:
    """Open ``u`` at type ``tp``.

    Raises :class:`TypeMismatch` unless ``tp`` is the embedding type (or
    the unparametrized origin of a parametrized embedding type).  ``bool``
    and ``int`` are distinct tags.
    """
    if not isinstance(u, UniversalValue):
        raise TypeMismatch(f"expected a UniversalValue, got {type(u).__name__}")
    if not _matches(u.type_tag, tp):
        raise TypeMismatch(
            f"value embedded at {_type_name(u.type_tag)} projected at {_type_name(tp)}"
        )
    return u.payload


def unbox(u: UniversalValue) -> Any:
    """Project ``u`` at its own tag."""
    return project(u, u.type_tag)
