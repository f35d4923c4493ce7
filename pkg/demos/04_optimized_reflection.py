"""
Optimized reflection
====================

Binds written in CPS let the first value return directly and every later
one restart the body from a driver loop, so the stack stays flat.
"""

import sys

from thermocont import Nondeterminism, OptNondeterminism

opt = OptNondeterminism()


def big_products(n):
    x = n.choose([2, 3, 4]) * n.choose([5, 7])
    return x if x >= 20 else n.fail()


print(opt.reify(lambda: big_products(opt)))
print(opt.stats)

# Depth of nested body executions for 200 singleton choices
sys.setrecursionlimit(20_000)


def max_depth(n, count=200):
    depth = [0, 0]

    def body():
        depth[0] += 1
        depth[1] = max(depth)
        try:
            return sum(n.choose([i]) for i in range(count))
        finally:
            depth[0] -= 1

    n.reify(body)
    return depth[1]


print("optimized:", max_depth(OptNondeterminism()))
print("generic:  ", max_depth(Nondeterminism()))
