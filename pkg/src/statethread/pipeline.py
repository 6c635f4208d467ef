"""A scripted, deterministic animation pipeline built from the calculus.

The simulated system layers several looping animation sequences, each with
its own period and frame count, and overlays a one-shot animation whenever
a motion event fires.  The generator's internal status (normal, or
triggered at some tick) is the threaded state; every unit is a pure
function and the whole per-tick step is composed from the core operators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Action, bind, fmap, get, inject, put, run


@dataclass(frozen=True)
class Layer:
    """One looping sequence: advances a frame every ``period`` ticks."""

    name: str
    period: int
    frames: int

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("layer name must be nonempty")
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if self.frames < 1:
            raise ValueError("frames must be >= 1")


@dataclass(frozen=True)
class Scenario:
    """The scripted configuration: ordered layers plus the overlay length."""

    layers: tuple[Layer, ...]
    trigger_duration: int

    def __post_init__(self) -> None:
        if self.trigger_duration < 1:
            raise ValueError("trigger_duration must be >= 1")
        names = [layer.name for layer in self.layers]
        if len(set(names)) != len(names):
            raise ValueError("layer names must be unique")


@dataclass(frozen=True)
class Normal:
    """Generator status: running the pre-defined sequences only."""


@dataclass(frozen=True)
class Triggered:
    """Generator status: an overlay started at tick ``since`` is active."""

    since: int


NORMAL = Normal()

AnimStatus = Normal | Triggered


@dataclass(frozen=True)
class EventTrace:
    """Scripted motion events: the ticks at which a jump is seen."""

    jump_ticks: tuple[int, ...]

    def __post_init__(self) -> None:
        ticks = self.jump_ticks
        if any(t < 0 for t in ticks):
            raise ValueError("jump ticks must be >= 0")
        if any(a >= b for a, b in zip(ticks, ticks[1:])):
            raise ValueError("jump ticks must be strictly increasing")


@dataclass(frozen=True)
class FrameInfo:
    """Per-tick frame description: one index per layer, optional overlay."""

    t: int
    layer_indices: tuple[tuple[str, int], ...]
    overlay: tuple[int, int] | None = None


#: One rendered tick of output.
RenderedFrame = str


def clock(tick: int, dt: int = 1) -> int:
    """Discrete clock: tick counter times the tick width."""
    return tick * dt


def capture_image(t: int) -> str:
    """Deterministic stand-in for a camera: a descriptor token per tick."""
    return f"img@{t}"


def frame_db(layer_name: str, index: int) -> str:
    """Deterministic stand-in for the frame asset store."""
    return f"{layer_name}#{index}"


def motion_sensor(trace: EventTrace, t: int) -> bool:
    """True when the scripted trace contains a jump at tick ``t``."""
    return t in trace.jump_ticks


def animate(sc: Scenario, t: int, jumping: bool) -> Action:
    """Per-tick frame generation over the generator status.

    Run on a status, the action first expires an overlay that has lasted
    ``trigger_duration`` ticks, then starts a new one if a jump is seen
    while normal, and finally emits the frame info: every layer shows frame
    ``(t // period) % frames`` and the overlay entry is present while the
    status stays triggered.  Jumps seen while already triggered are ignored.
    """

    def with_status(status: AnimStatus) -> Action:
        if isinstance(status, Triggered) and t - status.since >= sc.trigger_duration:
            status = NORMAL
        if isinstance(status, Normal) and jumping:
            status = Triggered(since=t)
        indices = tuple(
            (layer.name, (t // layer.period) % layer.frames) for layer in sc.layers
        )
        overlay = (status.since, t - status.since) if isinstance(status, Triggered) else None
        info = FrameInfo(t=t, layer_indices=indices, overlay=overlay)
        return bind(lambda _: inject(info), put(status))

    return bind(with_status, get())


def emit_frame_xml(fi: FrameInfo) -> str:
    """Frame info as one XML element, no whitespace between elements."""
    parts = [f'<frame t="{fi.t}">']
    for name, index in fi.layer_indices:
        parts.append(f'<layer name="{name}" index="{index}"/>')
    if fi.overlay is not None:
        since, index = fi.overlay
        parts.append(f'<overlay since="{since}" index="{index}"/>')
    parts.append("</frame>")
    return "".join(parts)


def render(fi: FrameInfo) -> RenderedFrame:
    """Frame info as one log line, e.g. ``t=3 birds[1] +overlay[0]``."""
    parts = [f"t={fi.t}"]
    for name, index in fi.layer_indices:
        parts.append(f"{name}[{index}]")
    if fi.overlay is not None:
        parts.append(f"+overlay[{fi.overlay[1]}]")
    return " ".join(parts)


def step(sc: Scenario, trace: EventTrace, t: int) -> Action:
    """The whole per-tick system as one action over the generator status.

    The contextual generator is bound in; the non-contextual renderer is
    mapped over the result.
    """
    generate = lambda u: animate(sc, u, motion_sensor(trace, u))
    return fmap(render, bind(generate, inject(t)))


def simulate(
    sc: Scenario, trace: EventTrace, n_ticks: int, dt: int = 1
) -> list[RenderedFrame]:
    """Run ``step`` for ``n_ticks`` clock ticks, threading the status."""
    lines = []
    status: AnimStatus = NORMAL
    for i in range(n_ticks):
        line, status = run(step(sc, trace, clock(i, dt)), status)
        lines.append(line)
    return lines


def simulate_frames(
    sc: Scenario, trace: EventTrace, n_ticks: int, dt: int = 1
) -> list[FrameInfo]:
    """Like :func:`simulate` but yields the frame info instead of log lines."""
    infos = []
    status: AnimStatus = NORMAL
    for i in range(n_ticks):
        t = clock(i, dt)
        generate = lambda u: animate(sc, u, motion_sensor(trace, u))
        info, status = run(bind(generate, inject(t)), status)
        infos.append(info)
    return infos
