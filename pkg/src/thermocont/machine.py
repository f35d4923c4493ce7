"""Two abstract machines for a tiny nondeterministic language.

Terms::

    t ::= x | n | S t | let x = t in t | choose x y

The *continuation machine* runs ``choose`` by pushing a copy of the current
machine continuation onto a soup of suspended threads.  The *history
machine* never copies a continuation: it records the choices taken in a
past, and when a path finishes it restarts the initial term with the next
path as its future, exactly as replay-based nondeterminism does.  Both
must produce the same result list, in the same order; :func:`differential_check`
tests that on a given term and :func:`gen_term` generates closed terms to
feed it.

Results are lists of naturals with the most recently finished path first.

Textual syntax (one term per line)::

    (num 3)  (var x)  (succ T)  (let x T U)  (choose x y)
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import StuckTerm

__all__ = [
    "Choose",
    "ContConfig",
    "Final",
    "Halt",
    "HistConfig",
    "Let",
    "LetK",
    "Num",
    "Succ",
    "SuccK",
    "Var",
    "differential_check",
    "format_results",
    "format_term",
    "free_vars",
    "gen_term",
    "iter_cont",
    "iter_hist",
    "nexthist",
    "parse_term",
    "parse_terms",
    "run_cont",
    "run_hist",
    "step_cont",
    "step_hist",
    "subst",
    "term_size",
]


# -- terms -------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Num:
    n: int


@dataclass(frozen=True, slots=True)
class Succ:
    t: "Term"


@dataclass(frozen=True, slots=True)
class Let:
    name: str
    bound: "Term"
    body: "Term"


@dataclass(frozen=True, slots=True)
class Choose:
    # Var in source terms; Num once substitution has reached it.
    x: Union[Var, Num]
    y: Union[Var, Num]


Term = Union[Var, Num, Succ, Let, Choose]


def subst(t: Term, x: str, n: int) -> Term:
    """Replace free occurrences of variable ``x`` in ``t`` by numeral ``n``."""
    if isinstance(t, Var):
        return Num(n) if t.name == x else t
    if isinstance(t, Num):
        return t
    if isinstance(t, Succ):
        return Succ(subst(t.t, x, n))
    if isinstance(t, Let):
        body = t.body if t.name == x else subst(t.body, x, n)
        return Let(t.name, subst(t.bound, x, n), body)
    if isinstance(t, Choose):
        return Choose(subst(t.x, x, n), subst(t.y, x, n))
    raise TypeError(f"not a term: {t!r}")


def free_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Num):
        return set()
    if isinstance(t, Succ):
        return free_vars(t.t)
    if isinstance(t, Let):
        return free_vars(t.bound) | (free_vars(t.body) - {t.name})
    return free_vars(t.x) | free_vars(t.y)


def term_size(t: Term) -> int:
    """Node count; ``choose x y`` counts as one node."""
    if isinstance(t, Succ):
        return 1 + term_size(t.t)
    if isinstance(t, Let):
        return 1 + term_size(t.bound) + term_size(t.body)
    return 1


# -- machine continuations -----------------------------------------------------

@dataclass(frozen=True, slots=True)
class Halt:
    pass


@dataclass(frozen=True, slots=True)
class SuccK:
    k: "MachineCont"


@dataclass(frozen=True, slots=True)
class LetK:
    name: str
    k: "MachineCont"
    body: Term


MachineCont = Union[Halt, SuccK, LetK]
HALT = Halt()


@dataclass(frozen=True, slots=True)
class ContConfig:
    term: Term
    cont: MachineCont
    soup: tuple[tuple[Term, MachineCont], ...] = ()
    result: tuple[int, ...] = ()


@dataclass(frozen=True, slots=True)
class HistConfig:
    term: Term
    cont: MachineCont
    past: tuple[int, ...]
    future: tuple[int, ...]
    result: tuple[int, ...]
    initial: Term


@dataclass(frozen=True, slots=True)
class Final:
    result: tuple[int, ...]


def _pure_step(term: Term, cont: MachineCont) -> tuple[Term, MachineCont] | None:
    """The four rules shared by both machines, or None if none applies."""
    if isinstance(term, Succ):
        return term.t, SuccK(cont)
    if isinstance(term, Let):
        return term.bound, LetK(term.name, cont, term.body)
    if isinstance(term, Num):
        if isinstance(cont, SuccK):
            return Num(term.n + 1), cont.k
        if isinstance(cont, LetK):
            return subst(cont.body, cont.name, term.n), cont.k
    return None


def _choice_values(term: Choose) -> tuple[int, int]:
    if not (isinstance(term.x, Num) and isinstance(term.y, Num)):
        raise StuckTerm(f"choose over unbound variable: {format_term(term)}")
    return term.x.n, term.y.n


def step_cont(c: ContConfig) -> ContConfig | Final:
    nxt = _pure_step(c.term, c.cont)
    if nxt is not None:
        return ContConfig(nxt[0], nxt[1], c.soup, c.result)
    if isinstance(c.term, Choose):
        n1, n2 = _choice_values(c.term)
        return ContConfig(Num(n1), c.cont, ((Num(n2), c.cont), *c.soup), c.result)
    if isinstance(c.term, Num) and isinstance(c.cont, Halt):
        if not c.soup:
            return Final((c.term.n, *c.result))
        (t2, k2), *rest = c.soup
        return ContConfig(t2, k2, tuple(rest), (c.term.n, *c.result))
    raise StuckTerm(f"no continuation-machine rule for {format_term(c.term)}")


def nexthist(past: tuple[int, ...] | list[int]) -> tuple[int, ...] | None:
    """Next future after a completed path, or None when exploration is over.

    ``past`` is in execution order (last element is the most recent choice).

    >>> nexthist((1, 2))
    (2,)
    """
    p = list(past)
    while p and p[-1] == 2:
        p.pop()
    if not p:
        return None
    p[-1] = 2
    return tuple(p)


def step_hist(c: HistConfig) -> HistConfig | Final:
    nxt = _pure_step(c.term, c.cont)
    if nxt is not None:
        return HistConfig(nxt[0], nxt[1], c.past, c.future, c.result, c.initial)
    if isinstance(c.term, Choose):
        n1, n2 = _choice_values(c.term)
        if not c.future:
            return HistConfig(c.term, c.cont, c.past, (1,), c.result, c.initial)
        i, *rest = c.future
        return HistConfig(Num(n1 if i == 1 else n2), c.cont, (*c.past, i), tuple(rest),
                          c.result, c.initial)
    if isinstance(c.term, Num) and isinstance(c.cont, Halt) and not c.future:
        result = (c.term.n, *c.result)
        future = nexthist(c.past)
        if future is None:
            return Final(result)
        return HistConfig(c.initial, HALT, (), future, result, c.initial)
    raise StuckTerm(f"no history-machine rule for {format_term(c.term)}")


def iter_cont(t: Term) -> Iterator[ContConfig | Final]:
    """Every configuration of the continuation machine, ending with Final."""
    c: ContConfig | Final = ContConfig(t, HALT)
    while True:
        yield c
        if isinstance(c, Final):
            return
        c = step_cont(c)


def iter_hist(t: Term) -> Iterator[HistConfig | Final]:
    c: HistConfig | Final = HistConfig(t, HALT, (), (), (), t)
    while True:
        yield c
        if isinstance(c, Final):
            return
        c = step_hist(c)


def _run(configs: Iterator) -> list[int]:
    last = None
    for last in configs:
        pass
    return list(last.result)


def run_cont(t: Term) -> list[int]:
    return _run(iter_cont(t))


def run_hist(t: Term) -> list[int]:
    return _run(iter_hist(t))


def differential_check(t: Term) -> bool:
    """True iff both machines produce the same result list, order included."""
    return run_cont(t) == run_hist(t)


# -- generation ----------------------------------------------------------------

_NAMES = "xyzuvw"


def gen_term(seed: int, max_size: int) -> Term:
    """Deterministic pseudo-random closed term with at most ``max_size`` nodes.

    ``choose`` only refers to variables in scope.  Numerals are kept small.
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    rng = random.Random(seed)
    return _gen(rng, rng.randint(1, max_size), [])


def _gen(rng: random.Random, size: int, scope: list[str]) -> Term:
    if size == 1:
        options = ["num"]
        if scope:
            options += ["var", "choose", "choose"]
        kind = rng.choice(options)
        if kind == "num":
            return Num(rng.randint(0, 9))
        if kind == "var":
            return Var(rng.choice(scope))
        return Choose(Var(rng.choice(scope)), Var(rng.choice(scope)))
    if size == 2 or rng.random() < 0.2:
        return Succ(_gen(rng, size - 1, scope))
    name = rng.choice(_NAMES)
    bound_size = rng.randint(1, size - 2)
    return Let(name, _gen(rng, bound_size, scope),
               _gen(rng, size - 1 - bound_size, [*scope, name]))


# -- text syntax ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\(|\)|[A-Za-z_][A-Za-z_0-9']*|\d+)")


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return f"(var {t.name})"
    if isinstance(t, Num):
        return f"(num {t.n})"
    if isinstance(t, Succ):
        return f"(succ {format_term(t.t)})"
    if isinstance(t, Let):
        return f"(let {t.name} {format_term(t.bound)} {format_term(t.body)})"
    return f"(choose {_atom(t.x)} {_atom(t.y)})"


def _atom(a: Var | Num) -> str:
    return a.name if isinstance(a, Var) else str(a.n)


def format_results(results: list[int] | tuple[int, ...]) -> str:
    return "[" + ",".join(str(n) for n in results) + "]"


def parse_term(text: str) -> Term:
    tokens = _tokenize(text)
    term, pos = _parse(tokens, 0)
    if pos != len(tokens):
        raise ValueError(f"trailing input after term: {' '.join(tokens[pos:])}")
    return term


def parse_terms(text: str) -> list[Term]:
    """Parse one term per non-blank line; ``#`` starts a comment line."""
    return [parse_term(line) for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")]


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def _expect(tokens: list[str], pos: int, tok: str) -> int:
    if pos >= len(tokens) or tokens[pos] != tok:
        found = tokens[pos] if pos < len(tokens) else "end of input"
        raise ValueError(f"expected {tok!r}, found {found!r}")
    return pos + 1


def _ident(tokens: list[str], pos: int) -> tuple[str, int]:
    if pos >= len(tokens) or not (tokens[pos][0].isalpha() or tokens[pos][0] == "_"):
        raise ValueError(f"expected a variable name at token {pos}")
    return tokens[pos], pos + 1


def _parse(tokens: list[str], pos: int) -> tuple[Term, int]:
    pos = _expect(tokens, pos, "(")
    if pos >= len(tokens):
        raise ValueError("unexpected end of input")
    head = tokens[pos]
    pos += 1
    if head == "num":
        if pos >= len(tokens) or not tokens[pos].isdigit():
            raise ValueError("num expects a natural")
        term: Term = Num(int(tokens[pos]))
        pos += 1
    elif head == "var":
        name, pos = _ident(tokens, pos)
        term = Var(name)
    elif head == "succ":
        inner, pos = _parse(tokens, pos)
        term = Succ(inner)
    elif head == "let":
        name, pos = _ident(tokens, pos)
        bound, pos = _parse(tokens, pos)
        body, pos = _parse(tokens, pos)
        term = Let(name, bound, body)
    elif head == "choose":
        args = []
        for _ in range(2):
            if pos >= len(tokens):
                raise ValueError("choose expects two arguments")
            tok = tokens[pos]
            args.append(Num(int(tok)) if tok.isdigit() else Var(_ident(tokens, pos)[0]))
            pos += 1
        term = Choose(*args)
    else:
        raise ValueError(f"unknown form {head!r}")
    return term, _expect(tokens, pos, ")")
