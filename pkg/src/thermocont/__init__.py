"""Delimited control and monadic reflection from exceptions and state.

Nothing here needs runtime support for continuations: a continuation is
recovered by replaying the delimited computation along a recorded list of
frames.  See the module docstrings for each layer:

* :mod:`thermocont.nondet` -- replay-based ``choose``/``with_nondeterminism``
* :mod:`thermocont.control` -- ``shift``/``reset`` (thermometer continuations)
* :mod:`thermocont.reflection` -- ``reflect``/``reify`` for any monad
* :mod:`thermocont.optimized` -- the same with top-level replays and direct returns
* :mod:`thermocont.machine` -- abstract machines behind the correctness argument
* :mod:`thermocont.bench` -- benchmark programs and command-line harness
"""

from .control import Control, Enter, Return
from .errors import (
    ControlError,
    EscapedContinuation,
    InternalInvariant,
    MissingReset,
    ReplayDivergence,
    StuckTerm,
    TypeMismatch,
    UsedOutsideScope,
)
from .nondet import ChoiceIdx, Empty, NondetContext, choose, next_idx, next_path, with_nondeterminism
from .optimized import OptFailure, OptimizedReflected, OptNondeterminism, cps_list_bind
from .reflection import (
    Failure,
    Just,
    ListMonad,
    MaybeMonad,
    Monad,
    Nondeterminism,
    Reflected,
    State,
    StateMonad,
)
from .universal import UniversalValue, embed, project

__version__ = "0.1.0"
