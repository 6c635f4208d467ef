# The action calculus from the ground up.
#
# An action is a pure function from a state to a (value, next state) pair.
# Nothing here mutates anything: composing actions builds a bigger pure
# function, and `run` evaluates it at a concrete starting state.

from statethread import Action, bind, fmap, get, identity, inject, join, kleisli, put, run

# `inject` wraps a plain value; the state flows through untouched.
print(run(inject(7), 100))  # ValueStatePair(value=7, state=100)

# `get` reads the state as a value, `put` replaces it.
print(run(get(), 42))       # (42, 42)
print(run(put(5), 0))       # (None, 5)

# A transfer function takes a plain value and returns an action.
# This one adds the state to its input and bumps the state.
add_state = lambda x: Action(lambda s: (x + s, s + 1))

# `bind` feeds an action's value into a transfer function, threading the
# state: inject(3) leaves state 10 alone, then add_state runs at 10.
print(run(bind(add_state, inject(3)), 10))  # (13, 11)

# `fmap` lifts a plain function over an action's value.  The post-state is
# kept, which is exactly what makes fmap(identity, m) a no-op.
tick = Action(lambda s: (s, s + 1))
print(run(fmap(lambda x: x + 1, tick), 0))  # (1, 1)
print(run(fmap(identity, tick), 0) == run(tick, 0))  # True

# `join` flattens an action that yields an action: the outer runs first,
# the inner continues from the state the outer left.
nested = Action(lambda s: (Action(lambda t: (t, t + 1)), s + 10))
print(run(join(nested), 0))  # (10, 11)

# Chains read right to left, like the operators they implement.
double = lambda x: Action(lambda s: (x * 2, s + 1))
incr = lambda y: Action(lambda s: (y + 1, s * 10))
print(run(bind(incr, bind(double, inject(3))), 1))  # (7, 20)

# `kleisli` packages the same chain as a single transfer function.
print(run(kleisli(incr, double)(3), 1))  # (7, 20)

# Purity means re-running is free of surprises.
chain = bind(incr, bind(double, get()))
assert run(chain, 4) == run(chain, 4)
print("re-running an action gives the same pair every time")
