"""
Nondeterminism by replay
========================

Run a thunk over and over, each time steering ``choose`` down the next path.
"""

from thermocont import choose, with_nondeterminism
from thermocont.nondet import NondetContext

print(with_nondeterminism(lambda: 2 * choose([1, 2, 3])))
print(with_nondeterminism(lambda: 2 + choose([1, 2, 3]) * choose([1, 10, 100])))

# An empty choice abandons the current path
print(with_nondeterminism(lambda: 2 * choose([])))

# Pythagorean triples, with a counter showing how often the body re-runs
ctx = NondetContext()
runs = 0


def triples():
    global runs
    runs += 1
    a = ctx.choose(range(1, 15))
    b = ctx.choose(range(a, 15))
    c = ctx.choose(range(b, 15))
    return (a, b, c) if a * a + b * b == c * c else ctx.choose([])


print(ctx.with_nondeterminism(triples), "after", runs, "runs")
