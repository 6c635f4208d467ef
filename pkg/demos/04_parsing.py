# Parser combinators on the same calculus: the state is a text cursor.
#
# A parser is an action over (text, offset) whose value is Success or
# Failure.  Failure lives in the value, not the state thread, so the exact
# same operators drive both the animation pipeline and the parsers.

from statethread.core import run
from statethread.parsing import (
    ParseError,
    ParserState,
    p_choice,
    p_literal,
    p_many,
    p_satisfy,
    parse_scenario,
    parse_trace,
    serialize_scenario,
)

digit = p_satisfy(lambda ch: "0" <= ch <= "9")

# Combinators are plain values; running one shows (outcome, cursor).
print(run(p_many(digit), ParserState("123a")))
print(run(p_choice(p_literal("jump"), p_literal("layer")), ParserState("layer x")))

# Failures never move the cursor, so alternatives compose freely.
print(run(p_literal("jump"), ParserState("junk")))

print()

# The pipeline's two file formats are built from these parts.
scenario_text = """\
# a forest of loops
trigger_duration 2
layer birds 2 4
layer frogs 3 2   # slower, shorter
"""
scenario = parse_scenario(scenario_text)
print(scenario)

# Serializing and reparsing is the identity.
assert parse_scenario(serialize_scenario(scenario)) == scenario
print(serialize_scenario(scenario), end="")

print()

# Errors carry the line and offset of the real problem.
try:
    parse_trace("jump 5\njump 3\n")
except ParseError as err:
    print(err)
