"""Parser combinators built on the state-threading calculus.

The threaded state is a text cursor (:class:`ParserState`); a parser is an
action over that state whose value is a :class:`Success` or :class:`Failure`.
Failure lives in the value, not the state thread, so the plain calculus is
reused unchanged.  Combinators manipulate the cursor exclusively through the
core operators (``get``/``put``/``inject``/``bind``/``fmap``); a structural
test enforces this.

On top of the combinators this module implements the two line-oriented file
formats used by the pipeline (scenario and event trace) together with their
serializers, which are exact inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .core import Action, bind, fmap, get, inject, put, run
from .pipeline import EventTrace, Layer, Scenario


@dataclass(frozen=True)
class ParserState:
    """The parse cursor: the full input text and an offset into it."""

    text: str
    offset: int = 0


@dataclass(frozen=True)
class Success:
    value: Any


@dataclass(frozen=True)
class Failure:
    message: str
    at: int


ParseOutcome = Success | Failure

#: A parser is an action over ParserState yielding a ParseOutcome.
Parser = Action


class ParseError(Exception):
    """Raised by the file-level parsers; renders with line and offset."""

    def __init__(self, message: str, at: int, line: int):
        super().__init__(message)
        self.message = message
        self.at = at
        self.line = line

    def __str__(self) -> str:
        return f"parse error at line {self.line}, offset {self.at}: {self.message}"


def _line_of(text: str, at: int) -> int:
    return text.count("\n", 0, at) + 1


def _fail(text: str, message: str, at: int) -> ParseError:
    return ParseError(message, at, _line_of(text, at))


# Primitive and generic combinators.


def p_satisfy(pred: Callable[[str], bool]) -> Parser:
    """Consume one character for which ``pred`` holds.

    Fails without moving the cursor on end of input or a rejected character.
    """

    def look(st: ParserState) -> Parser:
        if st.offset >= len(st.text):
            return inject(Failure("unexpected end of input", st.offset))
        ch = st.text[st.offset]
        if not pred(ch):
            return inject(Failure(f"unexpected character {ch!r}", st.offset))
        advanced = ParserState(st.text, st.offset + 1)
        return bind(lambda _: inject(Success(ch)), put(advanced))

    return bind(look, get())


def p_literal(word: str) -> Parser:
    """Match ``word`` exactly, advancing past it; the word must be nonempty."""
    if not word:
        raise ValueError("p_literal requires a nonempty word")

    def look(st: ParserState) -> Parser:
        end = st.offset + len(word)
        if st.text[st.offset:end] == word:
            return bind(lambda _: inject(Success(word)), put(ParserState(st.text, end)))
        return inject(Failure(f"expected {word!r}", st.offset))

    return bind(look, get())


def p_many(p: Parser) -> Parser:
    """Zero or more repetitions of ``p``; always succeeds.

    Stops at ``p``'s first failure with the cursor at the last success.  If
    ``p`` ever succeeds without consuming, fails as non-progressing instead
    of looping forever, restoring the cursor to where ``p_many`` started.
    """

    def start(entry: ParserState) -> Parser:
        def loop(acc: tuple, st0: ParserState) -> Parser:
            def with_outcome(out: ParseOutcome) -> Parser:
                def with_cursor(st1: ParserState) -> Parser:
                    if isinstance(out, Failure):
                        return bind(lambda _: inject(Success(acc)), put(st0))
                    if st1.offset == st0.offset:
                        stuck = Failure("non-progressing parser", st0.offset)
                        return bind(lambda _: inject(stuck), put(entry))
                    return loop(acc + (out.value,), st1)

                return bind(with_cursor, get())

            return bind(with_outcome, p)

        return loop((), entry)

    return bind(start, get())


def p_choice(a: Parser, b: Parser) -> Parser:
    """Try ``a``; on failure restore the cursor and try ``b``.

    Fails only if both fail, reporting ``b``'s failure with the cursor back
    at the starting point.
    """

    def start(st0: ParserState) -> Parser:
        def with_a(out: ParseOutcome) -> Parser:
            if isinstance(out, Success):
                return inject(out)

            def with_b(out_b: ParseOutcome) -> Parser:
                if isinstance(out_b, Failure):
                    return bind(lambda _: inject(out_b), put(st0))
                return inject(out_b)

            return bind(with_b, bind(lambda _: b, put(st0)))

        return bind(with_a, a)

    return bind(start, get())


def p_pure(value: Any) -> Parser:
    """Succeed with ``value`` without consuming anything."""
    return inject(Success(value))


def p_bind(p: Parser, f: Callable[[Any], Parser]) -> Parser:
    """Sequence parsers; failure short-circuits."""

    def k(out: ParseOutcome) -> Parser:
        if isinstance(out, Failure):
            return inject(out)
        return f(out.value)

    return bind(k, p)


def p_map(f: Callable[[Any], Any], p: Parser) -> Parser:
    """Map a plain function over a parser's success value."""
    return fmap(lambda out: Success(f(out.value)) if isinstance(out, Success) else out, p)


def p_label(p: Parser, message: str) -> Parser:
    """Replace the failure message, keeping its position."""
    return fmap(lambda out: Failure(message, out.at) if isinstance(out, Failure) else out, p)


def p_mark() -> Parser:
    """Succeed with the current offset; consumes nothing."""
    return fmap(lambda st: Success(st.offset), get())


def p_eof() -> Parser:
    """Succeed (with None) exactly at end of input."""
    return fmap(
        lambda st: Success(None)
        if st.offset >= len(st.text)
        else Failure("expected end of input", st.offset),
        get(),
    )


# The two line-oriented grammars.  Both share the lexical layer: `#` starts
# a comment running to end of line, blank lines are ignored, integers may
# carry a sign (range rules are enforced semantically, with positions).


def _is_space(ch: str) -> bool:
    return ch in " \t"


def _is_digit(ch: str) -> bool:
    return "0" <= ch <= "9"


def _is_ident_start(ch: str) -> bool:
    return "a" <= ch <= "z" or "A" <= ch <= "Z"


def _is_ident_rest(ch: str) -> bool:
    return _is_ident_start(ch) or _is_digit(ch) or ch == "_"


_p_spaces = p_many(p_satisfy(_is_space))


def _p_spaces1() -> Parser:
    return p_bind(p_satisfy(_is_space), lambda _: _p_spaces)


def _p_int() -> Parser:
    digits = p_bind(
        p_satisfy(_is_digit),
        lambda first: p_map(lambda rest: first + "".join(rest), p_many(p_satisfy(_is_digit))),
    )
    unsigned = p_map(int, digits)
    negative = p_bind(p_literal("-"), lambda _: p_map(lambda n: -n, unsigned))
    return p_label(p_choice(negative, unsigned), "expected integer")


def _p_ident() -> Parser:
    word = p_bind(
        p_satisfy(_is_ident_start),
        lambda first: p_map(lambda rest: first + "".join(rest), p_many(p_satisfy(_is_ident_rest))),
    )
    return p_label(word, "expected identifier")


_p_comment = p_bind(p_literal("#"), lambda _: p_many(p_satisfy(lambda ch: ch != "\n")))

_p_line_end = p_choice(p_literal("\n"), p_eof())


def _p_line_tail() -> Parser:
    """Optional spaces and comment, then a newline or end of input."""
    return p_bind(
        _p_spaces,
        lambda _: p_bind(p_choice(_p_comment, p_pure(None)), lambda _: _p_line_end),
    )


#: A blank or comment-only line; yields None so the file loop skips it.
def _p_skip_line() -> Parser:
    return p_map(lambda _: None, _p_line_tail())


def _p_field(p: Parser) -> Parser:
    """A space-separated field: mandatory leading whitespace, then ``p``."""
    return p_bind(_p_spaces1(), lambda _: p)


def _marked(p: Parser) -> Parser:
    """Pair a parse result with the offset it started at."""
    return p_bind(p_mark(), lambda at: p_map(lambda v: (v, at), p))


def _parse_lines(text: str, item: Parser) -> list:
    """Evaluate the line parser per line until end of input.

    Collects non-None item values; an item failure is raised with the
    position of the real problem (item alternatives backtrack internally,
    but the reported failure keeps its offset).  Folding with ``run`` here
    keeps the per-line recursion depth independent of the file length.
    """
    st = ParserState(text)
    collected = []
    while st.offset < len(text):
        out, nxt = run(item, st)
        if isinstance(out, Failure):
            raise _fail(text, out.message, out.at)
        if nxt.offset <= st.offset:
            raise _fail(text, "non-progressing parser", st.offset)
        if out.value is not None:
            collected.append(out.value)
        st = nxt
    return collected


def _trace_line() -> Parser:
    jump = p_bind(
        p_literal("jump"),
        lambda _: p_bind(
            _p_field(_marked(_p_int())),
            lambda tick_at: p_map(lambda _: tick_at, _p_line_tail()),
        ),
    )
    return p_choice(_p_skip_line(), jump)


def _scenario_line() -> Parser:
    duration = p_bind(
        p_literal("trigger_duration"),
        lambda _: p_bind(
            _p_field(_marked(_p_int())),
            lambda dur_at: p_map(lambda _: ("trigger_duration", dur_at), _p_line_tail()),
        ),
    )
    layer = p_bind(
        p_literal("layer"),
        lambda _: p_bind(
            _p_field(_marked(_p_ident())),
            lambda name_at: p_bind(
                _p_field(_marked(_p_int())),
                lambda period_at: p_bind(
                    _p_field(_marked(_p_int())),
                    lambda frames_at: p_map(
                        lambda _: ("layer", name_at, period_at, frames_at),
                        _p_line_tail(),
                    ),
                ),
            ),
        ),
    )
    return p_choice(_p_skip_line(), p_choice(duration, layer))


def parse_trace(text: str) -> EventTrace:
    """Parse an event-trace file; raises :class:`ParseError` on any problem."""
    ticks = []
    for tick, at in _parse_lines(text, _trace_line()):
        if tick < 0:
            raise _fail(text, f"jump tick must be >= 0, got {tick}", at)
        if ticks and tick <= ticks[-1]:
            raise _fail(text, f"non-increasing jump tick {tick}", at)
        ticks.append(tick)
    return EventTrace(tuple(ticks))


def parse_scenario(text: str) -> Scenario:
    """Parse a scenario file; raises :class:`ParseError` on any problem."""
    duration = None
    layers: list[Layer] = []
    seen: set[str] = set()
    for entry in _parse_lines(text, _scenario_line()):
        if entry[0] == "trigger_duration":
            value, at = entry[1]
            if duration is not None:
                raise _fail(text, "duplicate trigger_duration", at)
            if value < 1:
                raise _fail(text, f"trigger_duration must be >= 1, got {value}", at)
            duration = value
        else:
            (name, name_at), (period, period_at), (frames, frames_at) = entry[1:]
            if name in seen:
                raise _fail(text, f"duplicate layer name {name!r}", name_at)
            if period < 1:
                raise _fail(text, f"period must be >= 1, got {period}", period_at)
            if frames < 1:
                raise _fail(text, f"frames must be >= 1, got {frames}", frames_at)
            seen.add(name)
            layers.append(Layer(name, period, frames))

    end = len(text)
    if duration is None:
        raise _fail(text, "missing trigger_duration", end)
    if not layers:
        raise _fail(text, "expected at least one layer", end)
    return Scenario(tuple(layers), duration)


def serialize_trace(trace: EventTrace) -> str:
    """Inverse of :func:`parse_trace`."""
    return "".join(f"jump {t}\n" for t in trace.jump_ticks)


def serialize_scenario(sc: Scenario) -> str:
    """Inverse of :func:`parse_scenario`."""
    lines = [f"trigger_duration {sc.trigger_duration}"]
    lines.extend(f"layer {ly.name} {ly.period} {ly.frames}" for ly in sc.layers)
    return "".join(line + "\n" for line in lines)
