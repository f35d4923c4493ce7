"""
Monadic reflection
==================

Any monad becomes a direct-style effect via ``reflect`` and ``reify``.
"""

from thermocont import Failure, Just, Nondeterminism, State

nd = Nondeterminism()
print(nd.reify(lambda: nd.reflect([2, 3, 4]) * nd.reflect([5, 6])))

runs = 0


def big_products():
    global runs
    runs += 1
    x = nd.choose([2, 3, 4]) * nd.choose([5, 7])
    return x if x >= 20 else nd.fail()


print(nd.reify(big_products), "body ran", runs, "times")

# Failure: None aborts, Just(x) yields x
f = Failure()
print(f.reify(lambda: 1 + f.unwrap(Just(41))))
print(f.reify(lambda: 1 + f.unwrap(None)))

# State: reify builds a transformer, nothing runs until it is applied
st = State()


def counter():
    st.put(5)
    st.tick()
    return 2 * st.get()


program = st.reify(counter)
print(program(0))
print(st.reify(lambda: 3 * st.get())(2))
