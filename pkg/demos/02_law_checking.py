# The composition laws as executable, randomized checks.
#
# Each check samples integer transfer functions, actions, values and states,
# evaluates both sides of a law, and compares exactly.  The real operators
# pass every check; swap in a broken operator and the checks answer with
# concrete counterexamples small enough to re-evaluate by hand.

from statethread.laws import (
    MUTANT_TRIPLES,
    SampleConfig,
    TripleUnderTest,
    render_report,
    run_all,
)

cfg = SampleConfig(seed=42, samples=1000)

print("== the real operators ==")
for report in run_all(TripleUnderTest(), cfg):
    print(render_report(report))

# Now a deliberately broken binder: it evaluates in the right order but
# returns the *starting* state, throwing the thread away.
print()
print("== a state-dropping bind ==")
broken = MUTANT_TRIPLES["state_dropping_bind"]
for report in run_all(broken, SampleConfig(seed=1, samples=200)):
    if not report.passed:
        print(render_report(report))

# Every counterexample line lists the sampled inputs: f and g are affine
# functions given by their six coefficients, m is an injected start value
# threaded through a chain of such functions, and x, s are plain integers.
# Evaluating both sides by hand reproduces the expected/actual pair.
