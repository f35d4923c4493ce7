"""
Thermometer continuations
=========================

``shift`` and ``reset`` without any runtime support for continuations.
"""

from thermocont import Control

c = Control()

print(c.reset(lambda: 2 * c.shift(lambda k: 1 + k(5))))
print(c.reset(lambda: 1 + c.shift(lambda k: k(1) * k(2) * k(3))))

# Nested shifts inside one reset
print(1 + c.reset(lambda: 2 + c.shift(lambda k: 3 * c.shift(lambda l: l(k(10))))))

# A body that ignores k aborts the rest of the reset body
print(c.reset(lambda: [1, 2] + c.shift(lambda k: [3, 4])))
print(c.reset(lambda: 3 * c.shift(lambda k: [k(2), k(3), k(4)])))

# Two shifts in sequence
print(c.reset(lambda: c.shift(lambda k: 1 + k(2)) * c.shift(lambda k: 1 + k(3))))

# Each invocation of k replays the reset body; count the replays
entered = []


def body():
    entered.append(1)
    return 10 * c.shift(lambda k: [k(x) for x in range(4)])


print(c.reset(body), "body entered", len(entered), "times")
