"""The four interactive-system classes and their lifting into the calculus.

A class-0 system outputs a constant, class 1 a function of time, class 2 a
function of an arbitrary input, and class 3 a function of the input and an
internal status.  ``lift`` turns any of them into a class-3 transfer
function so that they all compose through the same operators; the lifted
lower classes never read or write the threaded state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable

from .core import Action, bind, inject, run


@dataclass(frozen=True)
class Class0:
    """Constant output."""

    c: Any


@dataclass(frozen=True)
class Class1:
    """Output is a function of time, a non-negative tick count."""

    f: Callable[[int], Any]


@dataclass(frozen=True)
class Class2:
    """Output is a function of an arbitrary input."""

    f: Callable[[Any], Any]


@dataclass(frozen=True)
class Class3:
    """Output depends on the input and an internal status."""

    f: Callable[[Any], Action]


SystemClass = Class0 | Class1 | Class2 | Class3


def lift(sys: SystemClass) -> Callable[[Any], Action]:
    """Lift a system of any class to a transfer function.

    For a class-1 system the input is the tick count itself.
    """
    if isinstance(sys, Class0):
        return lambda _x: inject(sys.c)
    if isinstance(sys, Class1):
        return lambda t: inject(sys.f(t))
    if isinstance(sys, Class2):
        return lambda x: inject(sys.f(x))
    if isinstance(sys, Class3):
        return sys.f
    raise TypeError(f"not a system class: {sys!r}")


def run_system(
    f: Callable[[Any], Action], inputs: Iterable[Any], s0: Any
) -> tuple[list[Any], Any]:
    """Feed ``inputs`` through ``f`` one by one, threading the state.

    Each step evaluates ``bind(f, inject(x))`` at the state the previous
    step left; returns all outputs and the final state.
    """
    outputs = []
    state = s0
    for x in inputs:
        y, state = run(bind(f, inject(x)), state)
        outputs.append(y)
    return outputs, state
