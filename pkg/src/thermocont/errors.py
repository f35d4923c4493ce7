"""Exception types raised by the library.

User-facing errors derive from :class:`ControlError`.  The control signals
used internally to unwind replays derive from :class:`ControlSignal`, which
is a ``BaseException`` so that ``except Exception`` in user code does not
swallow them.
"""


class ControlError(RuntimeError):
    """Base class for misuse of the control operators."""


class MissingReset(ControlError):
    """``shift``/``reflect`` was called outside any enclosing delimiter."""


class UsedOutsideScope(ControlError):
    """``choose`` was called with no active ``with_nondeterminism``."""


class InternalInvariant(ControlError):
    """Bookkeeping state was found inconsistent (nest underflow and similar)."""


class ReplayDivergence(ControlError):
    """A replay did not follow its recorded future.

    This happens when the replayed body is impure: it reads mutable state
    from outside, performs I/O, or otherwise behaves differently on the
    second run.
    """


class EscapedContinuation(ControlError):
    """An optimized continuation was invoked after its driver loop exited."""


class TypeMismatch(TypeError):
    """A universal value was projected at a type it was not embedded at."""


class StuckTerm(ValueError):
    """An abstract machine reached a configuration with no applicable rule."""


class ControlSignal(BaseException):
    """Non-local exit used by the replay machinery; never user-visible."""
