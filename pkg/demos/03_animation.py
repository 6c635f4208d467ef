# A scripted animation pipeline, composed entirely from the calculus.
#
# Several looping layers advance on a discrete clock; a scripted jump event
# triggers a one-shot overlay that expires after a fixed number of ticks.
# The generator's status (normal / triggered-at-tick) is the threaded state:
# no unit holds hidden mutable state, so every run is reproducible.

from statethread.core import run
from statethread.pipeline import (
    NORMAL,
    EventTrace,
    Layer,
    Scenario,
    emit_frame_xml,
    simulate,
    simulate_frames,
    step,
)

scenario = Scenario(
    layers=(Layer("birds", 2, 4), Layer("frogs", 3, 2)),
    trigger_duration=2,
)
trace = EventTrace(jump_ticks=(3, 8))

# The frame log, one line per tick.  Watch the overlay open at t=3 and t=8
# and close two ticks later, while the layers loop undisturbed.
for line in simulate(scenario, trace, 11, dt=1):
    print(line)

print()

# The same ticks as the XML the renderer consumes.
for info in simulate_frames(scenario, trace, 5, dt=1):
    print(emit_frame_xml(info))

print()

# A single tick is just an action over the generator status; running it by
# hand shows the (frame line, next status) pair.
print(run(step(scenario, trace, 3), NORMAL))
print(run(step(scenario, trace, 4), run(step(scenario, trace, 3), NORMAL).state))
