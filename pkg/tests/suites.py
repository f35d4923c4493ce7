"""Fixed direct-style programs shared by the equivalence tests.

Nondeterministic programs take ``(choose, fail)``; failure programs take
``(unwrap, fail)`` where ``unwrap`` reflects a ``Just``/``None`` value.
"""

from thermocont.reflection import Just


def _pythagorean(choose, fail):
    a = choose(range(1, 13))
    b = choose(range(a, 13))
    c = choose(range(b, 13))
    return (a, b, c) if a * a + b * b == c * c else fail()


def _subsets(choose, fail):
    return tuple(x for x in (1, 2, 3) if choose([True, False]))


def _permutations(choose, fail):
    rest, out = [1, 2, 3], []
    while rest:
        x = choose(rest)
        out.append(x)
        rest = [y for y in rest if y != x]
    return tuple(out)


def _dice(choose, fail):
    roll = (choose(range(1, 7)), choose(range(1, 7)), choose(range(1, 7)))
    return roll if sum(roll) == 10 else fail()


def _queens5(choose, fail):
    placed = []
    for _ in range(5):
        col = choose([c for c in range(5)
                      if all(c != p and abs(c - p) != len(placed) - r for r, p in enumerate(placed))])
        placed.append(col)
    return tuple(placed)


def _dag_paths(choose, fail):
    edges = {0: [1, 2], 1: [2, 3], 2: [3], 3: []}
    node, path = 0, [0]
    while node != 3:
        node = choose(edges[node])
        path.append(node)
    return tuple(path)


def _staircase(choose, fail):
    total, steps = 0, []
    while total < 4:
        s = choose([1, 2])
        if total + s > 4:
            fail()
        total += s
        steps.append(s)
    return tuple(steps)


def _early_fail(choose, fail):
    a = choose([1, 2])
    if a == 1:
        fail()
    return a * choose([3, 4])


NONDET_PROGRAMS = {
    "product": lambda choose, fail: choose([2, 3, 4]) * choose([5, 6]),
    "double": lambda choose, fail: 2 * choose([1, 2, 3]),
    "affine": lambda choose, fail: 2 + choose([1, 2, 3]) * choose([1, 10, 100]),
    "branching": lambda choose, fail: choose([5, 6]) if choose([True, False]) else choose([7, 8, 9]),
    "filtered": lambda choose, fail: (lambda x: x if x >= 20 else fail())(choose([2, 3, 4]) * choose([5, 7])),
    "empty": lambda choose, fail: 2 * choose([]),
    "pythagorean": _pythagorean,
    "subsets": _subsets,
    "permutations": _permutations,
    "dice": _dice,
    "queens5": _queens5,
    "dependent": lambda choose, fail: choose(range(choose([1, 2, 3]))),
    "strings": lambda choose, fail: choose(["a", "b"]) + choose(["x", "y", "z"]),
    "multiples": lambda choose, fail: (lambda x: x if x % 3 == 0 else fail())(choose(range(10))),
    "singletons": lambda choose, fail: sum(choose([i]) for i in range(10)),
    "coins": lambda choose, fail: sum(choose([0, 1]) for _ in range(4)),
    "early_fail": _early_fail,
    "digits": lambda choose, fail: (lambda x, y: (x, y) if x + y == 9 and x - y == 1 else fail())(
        choose(range(10)), choose(range(10))),
    "tuples": lambda choose, fail: choose([(1, "a"), (2, "b")])[choose([0, 1])],
    "dag_paths": _dag_paths,
    "staircase": _staircase,
    "always_fail": lambda choose, fail: fail(),
    "pure": lambda choose, fail: 42,
}


def _safe_div(unwrap, a, b):
    return unwrap(None if b == 0 else Just(a // b))


def _lookup_chain(unwrap, fail, start, table):
    key = start
    for _ in range(3):
        key = unwrap(Just(table[key]) if key in table else None)
    return key


_TABLE = {"a": "b", "b": "c", "c": "d", "x": "y"}


def _parse_sum(unwrap, strings):
    return sum(unwrap(Just(int(s)) if s.lstrip("-").isdigit() else None) for s in strings)


FAILURE_PROGRAMS = {
    "fail_plus": lambda unwrap, fail: 1 + fail(),
    "pure": lambda unwrap, fail: 5,
    "sum_just": lambda unwrap, fail: sum(unwrap(Just(i)) for i in range(10)),
    "unwrap_none": lambda unwrap, fail: unwrap(None) + 1,
    "div_ok": lambda unwrap, fail: _safe_div(unwrap, _safe_div(unwrap, 100, 5), 2),
    "div_zero": lambda unwrap, fail: _safe_div(unwrap, _safe_div(unwrap, 100, 0), 2),
    "div_late_zero": lambda unwrap, fail: _safe_div(unwrap, _safe_div(unwrap, 100, 5), 0),
    "lookup_ok": lambda unwrap, fail: _lookup_chain(unwrap, fail, "a", _TABLE),
    "lookup_missing": lambda unwrap, fail: _lookup_chain(unwrap, fail, "x", _TABLE),
    "parse_ok": lambda unwrap, fail: _parse_sum(unwrap, ["1", "-2", "30"]),
    "parse_bad": lambda unwrap, fail: _parse_sum(unwrap, ["1", "two", "3"]),
    "untaken_fail": lambda unwrap, fail: 7 if unwrap(Just(True)) else fail(),
    "taken_fail": lambda unwrap, fail: 7 if unwrap(Just(False)) else fail(),
    "just_none": lambda unwrap, fail: unwrap(Just(None)),
    "tuple": lambda unwrap, fail: (unwrap(Just(1)), unwrap(Just("b"))),
    "fail_after_many": lambda unwrap, fail: [unwrap(Just(i)) for i in range(20)] + [fail()],
    "loop_fail_at_7": lambda unwrap, fail: sum(i if i != 7 else fail() for i in range(10)),
    "max_just": lambda unwrap, fail: max(unwrap(Just(x)) for x in (3, 9, 4)),
    "string": lambda unwrap, fail: unwrap(Just("ab")) * unwrap(Just(2)),
    "nested_cond": lambda unwrap, fail: (unwrap(Just(3)) if unwrap(Just(1)) > 0 else fail()) * 2,
    "fail_first": lambda unwrap, fail: fail() + unwrap(Just(1)),
    "list_result": lambda unwrap, fail: [unwrap(Just(x)) * 2 for x in range(4)],
}
