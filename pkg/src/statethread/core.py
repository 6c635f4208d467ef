"""Pure state-threading actions and the operators that compose them.

An :class:`Action` is a contextual computation: a pure function from a
state to a ``(value, next state)`` pair.  A *transfer function* takes a
plain value and returns an action.  Everything in this module is pure;
actions never observe or mutate anything but the state they are given.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, NamedTuple, TypeVar

S = TypeVar("S")
A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")


@dataclass(frozen=True)
class Action(Generic[S, A]):
    """A pure function from a state to a ``(value, next state)`` pair.

    Evaluating ``step`` twice on equal states yields equal pairs; there is
    no other observable effect.
    """

    step: Callable[[S], tuple[A, S]]


#: A function from a plain value to an Action.
TransferFn = Callable[[A], Action]


class ValueStatePair(NamedTuple):
    """Result of evaluating an action: the value and the state it left."""

    value: Any
    state: Any


def inject(x: A) -> Action[S, A]:
    """Wrap a plain value as an action; the state passes through untouched."""
    return Action(lambda s: (x, s))


def run(m: Action[S, A], s0: S) -> ValueStatePair:
    """Evaluate an action at a concrete starting state."""
    value, state = m.step(s0)
    return ValueStatePair(value, state)


def bind(f: Callable[[A], Action[S, B]], m: Action[S, A]) -> Action[S, B]:
    """Sequence an action into a transfer function, threading the state.

    ``bind(f, m)`` first evaluates ``m``, then feeds its value to ``f`` and
    evaluates the resulting action at the state ``m`` left behind.
    """

    def step(s: S) -> tuple[B, S]:
        x, s1 = m.step(s)
        return f(x).step(s1)

    return Action(step)


def fmap(f: Callable[[A], B], m: Action[S, A]) -> Action[S, B]:
    """Apply a plain (non-contextual) function to an action's value.

    The post-state is the one ``m`` produced.  A variant that rewound the
    state to the starting one would break the functor identity law
    ``fmap(identity, m) == m``, so this module keeps the state.
    """

    def step(s: S) -> tuple[B, S]:
        x, s1 = m.step(s)
        return f(x), s1

    return Action(step)


def compose(b: Callable[[B], C], a: Callable[[A], B]) -> Callable[[A], C]:
    """Plain function composition: ``compose(b, a)(z) == b(a(z))``."""
    return lambda z: b(a(z))


def kleisli(
    g: Callable[[B], Action[S, C]], f: Callable[[A], Action[S, B]]
) -> Callable[[A], Action[S, C]]:
    """Compose two transfer functions into one; ``f`` runs first."""
    return lambda x: bind(g, f(x))


def join(mm: Action[S, Action[S, A]]) -> Action[S, A]:
    """Flatten an action yielding an action: run the outer, then the inner."""

    def step(s: S) -> tuple[A, S]:
        inner, s1 = mm.step(s)
        return inner.step(s1)

    return Action(step)


def get() -> Action[S, S]:
    """Action whose value is the current state, left unchanged."""
    return Action(lambda s: (s, s))


def put(s1: S) -> Action[S, None]:
    """Action that replaces the state with ``s1``, yielding ``None``."""
    return Action(lambda _: (None, s1))


def identity(x: A) -> A:
    """The identity function."""
    return x
