"""Benchmark programs, each written once per implementation strategy.

Implementations:

``indirect``
    plain functional code, effects encoded by hand (lists, ``Just``/``None``).
``replay``
    direct style on :class:`~thermocont.nondet.NondetContext`.
``thermo``
    direct style on generic monadic reflection (:mod:`thermocont.reflection`).
``thermo-opt``
    direct style on optimized reflection (:mod:`thermocont.optimized`).

The direct-style programs are shared: they take an effect object exposing
``choose``/``fail`` (and ``item`` for the parser) and do not care which
machinery backs it.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Any, Callable, Sequence

from ..nondet import NondetContext
from ..optimized import OptFailure, OptNondeterminism
from ..reflection import Failure, Just, Nondeterminism, Reflected, StateListMonad

__all__ = [
    "IMPLS",
    "arith_parse",
    "arith_parse_oracle",
    "gen_arith_expr",
    "gen_intparse_input",
    "intparse",
    "nqueens",
    "parse_int",
]

IMPLS = ("indirect", "replay", "thermo", "thermo-opt")


class _ReplayEffects:
    """``choose``/``fail`` over a fresh replay context."""

    def __init__(self) -> None:
        self.ctx = NondetContext()

    def choose(self, xs):
        return self.ctx.choose(xs)

    def fail(self):
        return self.ctx.choose(())

    def run(self, body: Callable[[], Any]) -> list:
        return self.ctx.with_nondeterminism(body)


def _check_impl(impl: str, allowed: Sequence[str] = IMPLS) -> None:
    if impl not in allowed:
        raise ValueError(f"unknown or unsupported implementation {impl!r}; expected one of {allowed}")


# -- n-queens --------------------------------------------------------------------

def _safe(placed: Sequence[int], col: int) -> bool:
    row = len(placed)
    return all(c != col and abs(c - col) != row - r for r, c in enumerate(placed))


def _queens_direct(n: int, choose: Callable[[Sequence[int]], int]) -> tuple[int, ...]:
    placed: list[int] = []
    for _ in range(n):
        placed.append(choose([c for c in range(n) if _safe(placed, c)]))
    return tuple(placed)


def _queens_indirect(n: int, placed: tuple[int, ...] = ()) -> list[tuple[int, ...]]:
    if len(placed) == n:
        return [placed]
    out = []
    for c in range(n):
        if _safe(placed, c):
            out.extend(_queens_indirect(n, placed + (c,)))
    return out


def nqueens(n: int, impl: str = "indirect") -> list[tuple[int, ...]]:
    """All placements of ``n`` non-attacking queens, one column per row.

    Solutions come out in lexicographic order for every implementation.
    """
    _check_impl(impl)
    if not 1 <= n <= 13:
        raise ValueError("n must be between 1 and 13")
    if impl == "indirect":
        return _queens_indirect(n)
    if impl == "replay":
        eff = _ReplayEffects()
        return eff.run(lambda: _queens_direct(n, eff.choose))
    if impl == "thermo":
        nd = Nondeterminism()
        return nd.reify(lambda: _queens_direct(n, nd.choose))
    nd_opt = OptNondeterminism()
    return nd_opt.reify(lambda: _queens_direct(n, nd_opt.choose))


# -- integer parsing with failure -------------------------------------------------

_INT = re.compile(r"-?[0-9]+")


def parse_int(s: str) -> int | None:
    return int(s) if _INT.fullmatch(s) else None


def _sum_direct(strings: Sequence[str], parse: Callable[[str], int]) -> int:
    total = 0
    for s in strings:
        total += parse(s)
    return total


def _parser_with(fail: Callable[[], Any]) -> Callable[[str], int]:
    def parse(s: str) -> int:
        n = parse_int(s)
        return fail() if n is None else n

    return parse


def intparse(strings: Sequence[str], mode: str = "glob", impl: str = "indirect") -> Any:
    """Sum of the parsed integers.

    ``glob``: ``Just(total)``, or ``None`` if any entry is not an integer.
    ``local``: an ``int``, skipping entries that are not integers.
    """
    _check_impl(impl)
    if mode not in ("glob", "local"):
        raise ValueError(f"mode must be 'glob' or 'local', not {mode!r}")

    if impl == "indirect":
        parsed = [parse_int(s) for s in strings]
        if mode == "local":
            return sum(n for n in parsed if n is not None)
        acc: Just | None = Just(0)
        for n in parsed:
            acc = None if acc is None or n is None else Just(acc.value + n)
        return acc

    if impl == "replay":
        eff = _ReplayEffects()
        parse = _parser_with(eff.fail)
        if mode == "glob":
            results = eff.run(lambda: _sum_direct(strings, parse))
            return Just(results[0]) if results else None
        return sum(sum(eff.run(lambda s=s: parse(s))) for s in strings)

    r: Failure | OptFailure = Failure() if impl == "thermo" else OptFailure()
    parse = _parser_with(r.fail)
    if mode == "glob":
        return r.reify(lambda: _sum_direct(strings, parse))
    total = 0
    for s in strings:
        m = r.reify(lambda s=s: parse(s))
        if m is not None:
            total += m.value
    return total


def gen_intparse_input(n: int, seed: int = 0, bad_fraction: Fraction | str | None = None,
                       bad_middle: bool = False) -> list[str]:
    """``n`` integer strings with evenly spaced alphabetic entries.

    With ``bad_fraction = p/q`` entry ``i`` is bad whenever ``floor((i+1)p/q)``
    steps up, so 1/10 makes every tenth entry bad.  ``bad_middle`` replaces
    the entry halfway through.
    """
    rng = random.Random(seed)
    out = [str(rng.randint(-9999, 9999)) for _ in range(n)]
    letters = "abcdefghijklmnopqrstuvwxyz"

    def bad() -> str:
        return "".join(rng.choice(letters) for _ in range(rng.randint(1, 4)))

    if bad_fraction is not None:
        frac = Fraction(bad_fraction)
        if not 0 <= frac <= 1:
            raise ValueError("bad_fraction must lie in [0, 1]")
        for i in range(n):
            if ((i + 1) * frac).__floor__() > (i * frac).__floor__():
                out[i] = bad()
    if bad_middle and n:
        out[n // 2] = bad()
    return out


# -- prefix-ambiguous arithmetic parsing --------------------------------------------

class _ReplayParser:
    """Parser effects on replay nondeterminism; the input position is local
    to one run of the body, so each replay starts again at position 0."""

    def __init__(self, text: str, eff: _ReplayEffects) -> None:
        self.text = text
        self.pos = 0
        self.choose = eff.choose
        self.fail = eff.fail

    def item(self) -> str:
        if self.pos >= len(self.text):
            return self.fail()
        c = self.text[self.pos]
        self.pos += 1
        return c


class _StateListParser:
    """Parser effects reflected from the state-and-list monad ``pos -> [(a, pos)]``."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.r = Reflected(StateListMonad())

    def item(self) -> str:
        text = self.text
        return self.r.reflect(lambda i: [(text[i], i + 1)] if i < len(text) else [])

    def choose(self, xs):
        xs = list(xs)
        return self.r.reflect(lambda i: [(x, i) for x in xs])

    def fail(self):
        return self.r.reflect(lambda i: [])


_STOP_OR_GO = (False, True)


def _expr(p) -> int:
    v = _term(p)
    while p.choose(_STOP_OR_GO):
        if p.item() != "+":
            p.fail()
        v += _term(p)
    return v


def _term(p) -> int:
    v = _factor(p)
    while p.choose(_STOP_OR_GO):
        if p.item() != "*":
            p.fail()
        v *= _factor(p)
    return v


def _factor(p) -> int:
    c = p.item()
    if c == "(":
        v = _expr(p)
        if p.item() != ")":
            p.fail()
        return v
    if not c.isdigit():
        return p.fail()
    n = int(c)
    while p.choose(_STOP_OR_GO):
        d = p.item()
        if not d.isdigit():
            p.fail()
        n = n * 10 + int(d)
    return n


# The indirect version: parsers are functions pos -> [(value, pos)].

def _p_bind(p, f):
    return lambda i: [r for v, j in p(i) for r in f(v)(j)]


def _p_unit(v):
    return lambda i: [(v, i)]


def _p_alt(p, q):
    return lambda i: p(i) + q(i)


def _p_fail(i):
    return []


def _indirect_parser(text: str):
    def item(i):
        return [(text[i], i + 1)] if i < len(text) else []

    def sym(c):
        return _p_bind(item, lambda x: _p_unit(x) if x == c else _p_fail)

    def chain(p, op, combine):
        def rest(a):
            return _p_alt(_p_unit(a),
                          _p_bind(sym(op), lambda _: _p_bind(p, lambda b: rest(combine(a, b)))))
        return _p_bind(p, rest)

    def digits(n):
        more = _p_bind(item, lambda d: digits(n * 10 + int(d)) if d.isdigit() else _p_fail)
        return _p_alt(_p_unit(n), more)

    def factor(i):
        number = _p_bind(item, lambda c: digits(int(c)) if c.isdigit() else _p_fail)
        paren = _p_bind(sym("("), lambda _: _p_bind(expr, lambda v: _p_bind(sym(")"), lambda _: _p_unit(v))))
        return _p_alt(number, paren)(i)

    def term(i):
        return chain(factor, "*", lambda a, b: a * b)(i)

    def expr(i):
        return chain(term, "+", lambda a, b: a + b)(i)

    return expr


def arith_parse(text: str, impl: str = "indirect") -> list[int]:
    """Values of every prefix of ``text`` that is a complete expression.

    Grammar: ``E -> E + T | T``, ``T -> T * F | F``, ``F -> ( E ) | digits``.
    Every alternative tries "stop here" before "keep going", so results are
    yielded shortest prefix first.  ``thermo-opt`` is not available: the
    parser monad carries state, which the optimized reflection cannot host.
    """
    _check_impl(impl, ("indirect", "replay", "thermo"))
    if impl == "indirect":
        return [v for v, _ in _indirect_parser(text)(0)]
    if impl == "replay":
        eff = _ReplayEffects()
        return eff.run(lambda: _expr(_ReplayParser(text, eff)))
    p = _StateListParser(text)
    return [v for v, _ in p.r.reify(lambda: _expr(p))(0)]


def arith_parse_oracle(text: str) -> list[int]:
    """Brute force: test every prefix with a deterministic recursive-descent
    parser that must consume all of it, shortest prefix first."""
    out = []
    for end in range(1, len(text) + 1):
        v = _full_parse(text[:end])
        if v is not None:
            out.append(v)
    return out


def _full_parse(s: str) -> int | None:
    pos = 0

    def peek() -> str:
        return s[pos] if pos < len(s) else ""

    def expr() -> int | None:
        nonlocal pos
        v = term()
        while v is not None and peek() == "+":
            pos += 1
            w = term()
            v = None if w is None else v + w
        return v

    def term() -> int | None:
        nonlocal pos
        v = factor()
        while v is not None and peek() == "*":
            pos += 1
            w = factor()
            v = None if w is None else v * w
        return v

    def factor() -> int | None:
        nonlocal pos
        if peek() == "(":
            pos += 1
            v = expr()
            if v is None or peek() != ")":
                return None
            pos += 1
            return v
        start = pos
        while peek().isdigit():
            pos += 1
        return int(s[start:pos]) if pos > start else None

    v = expr()
    return v if pos == len(s) else None


def gen_arith_expr(leaves: int, seed: int = 0) -> str:
    """Random expression over ``+``, ``*`` and parentheses with ``leaves`` numbers."""
    if leaves < 1:
        raise ValueError("an expression needs at least one leaf")
    rng = random.Random(seed)

    def build(k: int) -> str:
        if k == 1:
            return str(rng.randint(0, 99))
        left = rng.randint(1, k - 1)
        s = build(left) + rng.choice("+*") + build(k - left)
        return f"({s})" if rng.random() < 0.3 else s

    return build(leaves)
