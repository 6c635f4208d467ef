"""Shared test utilities: an independent reference simulator and fuzzers.

The reference simulator is a deliberately plain imperative loop with a
mutable status flag; it shares no code with the combinator-built pipeline
it is used to check.
"""

from __future__ import annotations

import random

from statethread.pipeline import EventTrace, Layer, Scenario


def reference_simulate(sc: Scenario, trace: EventTrace, n_ticks: int, dt: int = 1) -> list[str]:
    lines = []
    triggered = False
    since = 0
    jumps = set(trace.jump_ticks)
    for i in range(n_ticks):
        t = i * dt
        if triggered and t - since >= sc.trigger_duration:
            triggered = False
        if not triggered and t in jumps:
            triggered = True
            since = t
        parts = ["t=%d" % t]
        for layer in sc.layers:
            parts.append("%s[%d]" % (layer.name, (t // layer.period) % layer.frames))
        if triggered:
            parts.append("+overlay[%d]" % (t - since))
        lines.append(" ".join(parts))
    return lines


_NAME_POOL = [
    "birds", "frogs", "fish", "wind", "trees", "clouds", "moon", "stars",
    "rain", "grass", "deer", "owls",
]

_IDENT_FIRST = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
_IDENT_REST = _IDENT_FIRST + "0123456789_"


def random_ident(rng: random.Random) -> str:
    length = rng.randint(0, 7)
    return rng.choice(_IDENT_FIRST) + "".join(rng.choice(_IDENT_REST) for _ in range(length))


def random_scenario(rng: random.Random, max_layers: int = 4) -> Scenario:
    n_layers = rng.randint(1, max_layers)
    names: list[str] = []
    while len(names) < n_layers:
        name = rng.choice(_NAME_POOL)
        if name not in names:
            names.append(name)
    layers = tuple(Layer(name, rng.randint(1, 5), rng.randint(1, 8)) for name in names)
    return Scenario(layers, rng.randint(1, 6))


def random_trace(rng: random.Random, max_tick: int = 64) -> EventTrace:
    count = rng.randint(0, min(10, max_tick))
    return EventTrace(tuple(sorted(rng.sample(range(max_tick), count))))


def random_ident_scenario(rng: random.Random) -> Scenario:
    """Scenario with arbitrary grammar-valid names and wide integer fields."""
    n_layers = rng.randint(1, 6)
    names: list[str] = []
    while len(names) < n_layers:
        name = random_ident(rng)
        if name not in names:
            names.append(name)
    layers = tuple(
        Layer(name, rng.randint(1, 10**6), rng.randint(1, 10**6)) for name in names
    )
    return Scenario(layers, rng.randint(1, 10**6))


def random_wide_trace(rng: random.Random) -> EventTrace:
    count = rng.randint(0, 12)
    ticks = sorted(rng.sample(range(0, 10**7), count))
    return EventTrace(tuple(ticks))
