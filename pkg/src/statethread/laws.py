"""Executable checks for the composition laws of the action calculus.

Function equality is undecidable, so every law is checked extensionally:
both sides are evaluated at randomly sampled integer inputs and states and
compared exactly.  The sampled transfer functions are affine in the value
and the state, which is rich enough to expose ordering and state-threading
bugs while keeping counterexamples small enough to re-check by hand.

The module also ships four deliberately broken operator triples
(:data:`MUTANT_TRIPLES`); the test suite uses them to prove the checks can
actually fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable

from .core import Action, bind, compose, fmap, identity, inject, join, run

MAX_COUNTEREXAMPLES = 10

_COEFF_RANGE = (-3, 3)


@dataclass(frozen=True)
class SampleConfig:
    """Deterministic sampling plan: same config, same generated sequence."""

    seed: int = 0
    samples: int = 1000
    state_range: tuple[int, int] = (-100, 100)
    value_range: tuple[int, int] = (-100, 100)


@dataclass(frozen=True)
class Counterexample:
    inputs: dict[str, Any]
    expected: tuple[Any, Any]
    actual: tuple[Any, Any]


@dataclass(frozen=True)
class LawReport:
    """Outcome of one law check; ``passed`` iff no counterexample was found."""

    law_name: str
    checked: int
    passed: bool
    counterexamples: tuple[Counterexample, ...]


@dataclass(frozen=True)
class TripleUnderTest:
    """The three operations a law check exercises.

    Defaults are the real implementations; tests substitute broken ones.
    """

    inject_impl: Callable = inject
    bind_impl: Callable = bind
    fmap_impl: Callable = fmap


@dataclass(frozen=True)
class AffineFn:
    """Sampled transfer function ``x -> (s -> (a*x+b*s+c, d*s+e*x+k))``."""

    a: int
    b: int
    c: int
    d: int
    e: int
    k: int

    def value_at(self, x: int, s: int) -> int:
        return self.a * x + self.b * s + self.c

    def state_at(self, x: int, s: int) -> int:
        return self.d * s + self.e * x + self.k

    def __call__(self, x: int) -> Action:
        return Action(lambda s: (self.value_at(x, s), self.state_at(x, s)))


@dataclass(frozen=True)
class PlainFn:
    """Sampled non-contextual function ``x -> p*x + q``."""

    p: int
    q: int

    def __call__(self, x: int) -> int:
        return self.p * x + self.q


@dataclass(frozen=True)
class ActionRecipe:
    """A sampled action: ``inject(start)`` threaded through ``chain`` by bind.

    Recipes are reported in counterexamples so a failure can be rebuilt and
    re-evaluated independently of the check that found it.
    """

    start: int
    chain: tuple[AffineFn, ...]

    def build(self) -> Action:
        m = inject(self.start)
        for fn in self.chain:
            m = bind(fn, m)
        return m


def _sample_fn(rng: random.Random) -> AffineFn:
    lo, hi = _COEFF_RANGE
    return AffineFn(*(rng.randint(lo, hi) for _ in range(6)))


def _sample_plain(rng: random.Random) -> PlainFn:
    lo, hi = _COEFF_RANGE
    return PlainFn(rng.randint(lo, hi), rng.randint(lo, hi))


def _sample_recipe(rng: random.Random, cfg: SampleConfig) -> ActionRecipe:
    start = rng.randint(*cfg.value_range)
    depth = rng.randint(0, 2)
    return ActionRecipe(start, tuple(_sample_fn(rng) for _ in range(depth)))


class _Collector:
    """Accumulates failures for one check, capping stored counterexamples."""

    def __init__(self) -> None:
        self.failures = 0
        self.stored: list[Counterexample] = []

    def compare(self, inputs: dict, expected: tuple, actual: tuple) -> None:
        if expected == actual:
            return
        self.failures += 1
        if len(self.stored) < MAX_COUNTEREXAMPLES:
            self.stored.append(Counterexample(inputs, tuple(expected), tuple(actual)))

    def report(self, law_name: str, checked: int) -> LawReport:
        return LawReport(law_name, checked, self.failures == 0, tuple(self.stored))


def check_left_identity(t: TripleUnderTest, cfg: SampleConfig) -> LawReport:
    """Binding an injected value into ``f`` behaves like applying ``f``."""
    rng = random.Random(cfg.seed)
    col = _Collector()
    for _ in range(cfg.samples):
        f = _sample_fn(rng)
        x = rng.randint(*cfg.value_range)
        s = rng.randint(*cfg.state_range)
        expected = run(f(x), s)
        actual = run(t.bind_impl(f, t.inject_impl(x)), s)
        col.compare({"f": f, "x": x, "s": s}, expected, actual)
    return col.report("left_identity", cfg.samples)


def check_right_identity(t: TripleUnderTest, cfg: SampleConfig) -> LawReport:
    """Binding an action into the injector leaves the action unchanged."""
    rng = random.Random(cfg.seed)
    col = _Collector()
    for _ in range(cfg.samples):
        m = _sample_recipe(rng, cfg)
        s = rng.randint(*cfg.state_range)
        expected = run(m.build(), s)
        actual = run(t.bind_impl(t.inject_impl, m.build()), s)
        col.compare({"m": m, "s": s}, expected, actual)
    return col.report("right_identity", cfg.samples)


def check_associativity(t: TripleUnderTest, cfg: SampleConfig) -> LawReport:
    """Nested binds equal the bind of the composed transfer function."""
    rng = random.Random(cfg.seed)
    col = _Collector()
    for _ in range(cfg.samples):
        f = _sample_fn(rng)
        g = _sample_fn(rng)
        m = _sample_recipe(rng, cfg)
        s = rng.randint(*cfg.state_range)
        expected = run(t.bind_impl(lambda x: t.bind_impl(g, f(x)), m.build()), s)
        actual = run(t.bind_impl(g, t.bind_impl(f, m.build())), s)
        col.compare({"f": f, "g": g, "m": m, "s": s}, expected, actual)
    return col.report("associativity", cfg.samples)


def check_functor_laws(t: TripleUnderTest, cfg: SampleConfig) -> LawReport:
    """Mapping identity is a no-op; mapping a composition equals two maps."""
    rng = random.Random(cfg.seed)
    col = _Collector()
    for _ in range(cfg.samples):
        g = _sample_plain(rng)
        h = _sample_plain(rng)
        m = _sample_recipe(rng, cfg)
        s = rng.randint(*cfg.state_range)
        col.compare(
            {"prop": "identity", "m": m, "s": s},
            run(m.build(), s),
            run(t.fmap_impl(identity, m.build()), s),
        )
        col.compare(
            {"prop": "composition", "g": g, "h": h, "m": m, "s": s},
            run(t.fmap_impl(h, t.fmap_impl(g, m.build())), s),
            run(t.fmap_impl(compose(h, g), m.build()), s),
        )
    return col.report("functor", cfg.samples)


def check_coherence(t: TripleUnderTest, cfg: SampleConfig) -> LawReport:
    """fmap agrees with bind-of-injected, and bind agrees with join-of-fmap."""
    rng = random.Random(cfg.seed)
    col = _Collector()
    for _ in range(cfg.samples):
        p = _sample_plain(rng)
        f = _sample_fn(rng)
        m = _sample_recipe(rng, cfg)
        s = rng.randint(*cfg.state_range)
        col.compare(
            {"prop": "fmap_vs_bind", "p": p, "m": m, "s": s},
            run(t.bind_impl(compose(t.inject_impl, p), m.build()), s),
            run(t.fmap_impl(p, m.build()), s),
        )
        col.compare(
            {"prop": "bind_vs_join", "f": f, "m": m, "s": s},
            run(join(t.fmap_impl(f, m.build())), s),
            run(t.bind_impl(f, m.build()), s),
        )
    return col.report("coherence", cfg.samples)


def check_naturality(t: TripleUnderTest, cfg: SampleConfig) -> LawReport:
    """The injector and join commute with the functor.

    Nested actions are compared by running the outer action and feeding the
    state it leaves into the inner one, which is exactly what ``join`` does,
    so both properties are stated through ``join``:

    * ``join(inject(m))`` equals ``join(fmap(inject, m))``;
    * ``join(fmap(join, mmm))`` equals ``join(join(mmm))``.
    """
    rng = random.Random(cfg.seed)
    col = _Collector()
    for _ in range(cfg.samples):
        m = _sample_recipe(rng, cfg)
        m1 = _sample_recipe(rng, cfg)
        m2 = _sample_recipe(rng, cfg)
        f = _sample_fn(rng)
        s = rng.randint(*cfg.state_range)
        col.compare(
            {"prop": "inject_commutes", "m": m, "s": s},
            run(join(t.inject_impl(m.build())), s),
            run(join(t.fmap_impl(t.inject_impl, m.build())), s),
        )
        mmm = _nested_action(m1, m2, f)
        col.compare(
            {"prop": "join_commutes", "m1": m1, "m2": m2, "f": f, "s": s},
            run(join(join(mmm)), s),
            run(join(t.fmap_impl(join, mmm)), s),
        )
    return col.report("naturality", cfg.samples)


def _nested_action(m1: ActionRecipe, m2: ActionRecipe, f: AffineFn) -> Action:
    """Triply nested action whose every layer both reads and moves the state."""
    return fmap(
        lambda x: fmap(lambda y: bind(f, inject(x + y)), m2.build()),
        m1.build(),
    )


def check_expansion(cfg: SampleConfig) -> LawReport:
    """Two chained binds equal their hand-threaded step-by-step expansion."""
    rng = random.Random(cfg.seed)
    col = _Collector()
    for _ in range(cfg.samples):
        g = _sample_fn(rng)
        h = _sample_fn(rng)
        x = rng.randint(*cfg.value_range)
        s = rng.randint(*cfg.state_range)
        # Oracle: thread the pairs by plain arithmetic, no combinators.
        y = g.value_at(x, s)
        t1 = g.state_at(x, s)
        expected = (h.value_at(y, t1), h.state_at(y, t1))
        actual = run(bind(h, bind(g, inject(x))), s)
        col.compare({"g": g, "h": h, "x": x, "s": s}, expected, actual)
    return col.report("expansion", cfg.samples)


#: The seven checks in the order reports are emitted.
ALL_CHECKS = (
    "left_identity",
    "right_identity",
    "associativity",
    "functor",
    "coherence",
    "naturality",
    "expansion",
)


def run_all(t: TripleUnderTest, cfg: SampleConfig) -> list[LawReport]:
    """Run every check against ``t`` in the fixed report order."""
    return [
        check_left_identity(t, cfg),
        check_right_identity(t, cfg),
        check_associativity(t, cfg),
        check_functor_laws(t, cfg),
        check_coherence(t, cfg),
        check_naturality(t, cfg),
        check_expansion(cfg),
    ]


def render_report(r: LawReport) -> str:
    """One summary line plus one indented line per stored counterexample."""
    verdict = "PASS" if r.passed else "FAIL"
    lines = [
        f"LAW {r.law_name} {verdict} checked={r.checked} "
        f"counterexamples={len(r.counterexamples)}"
    ]
    for ce in r.counterexamples:
        ins = " ".join(f"{k}={v!r}" for k, v in ce.inputs.items())
        lines.append(
            f"  CE inputs={ins} "
            f"expected={ce.expected[0]},{ce.expected[1]} "
            f"actual={ce.actual[0]},{ce.actual[1]}"
        )
    return "\n".join(lines)


# Deliberately broken triples, used to show the checks reject wrong
# implementations.  Each replaces exactly one operation.


def _bind_state_dropping(f: Callable, m: Action) -> Action:
    """Evaluates in order but throws the threaded state away."""

    def step(s):
        x, s1 = m.step(s)
        v, _ = f(x).step(s1)
        return v, s

    return Action(step)


def _inject_state_bumping(x) -> Action:
    """Injection that fails to leave the state alone."""
    return Action(lambda s: (x, s + 1))


def _bind_order_swapping(f: Callable, m: Action) -> Action:
    """Applies f's state effect before m's instead of after."""

    def step(s):
        x, _ = m.step(s)
        y, s1 = f(x).step(s)
        _, s2 = m.step(s1)
        return y, s2

    return Action(step)


def _fmap_state_dropping(f: Callable, m: Action) -> Action:
    """Maps the value but rewinds the state to the starting one."""

    def step(s):
        x, _ = m.step(s)
        return f(x), s

    return Action(step)


MUTANT_TRIPLES = {
    "state_dropping_bind": TripleUnderTest(bind_impl=_bind_state_dropping),
    "state_bumping_inject": TripleUnderTest(inject_impl=_inject_state_bumping),
    "order_swapping_bind": TripleUnderTest(bind_impl=_bind_order_swapping),
    "state_dropping_fmap": TripleUnderTest(fmap_impl=_fmap_state_dropping),
}
