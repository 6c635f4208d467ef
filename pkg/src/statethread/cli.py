"""Command-line entry point: law verification, simulation, format checking.

Exit codes: 0 success, 1 a law check failed, 2 usage error or unreadable or
malformed input.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .laws import SampleConfig, TripleUnderTest, render_report, run_all
from .parsing import ParseError, parse_scenario, parse_trace
from .pipeline import emit_frame_xml, simulate, simulate_frames


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="statethread",
        description="State-threading action calculus: verify its laws or run the scripted animation pipeline.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_laws = sub.add_parser("laws", help="run the seven composition-law checks")
    p_laws.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p_laws.add_argument(
        "--samples", type=int, default=1000, help="samples per check (default 1000)"
    )

    p_sim = sub.add_parser("simulate", help="run the scripted animation pipeline")
    p_sim.add_argument("--scenario", required=True, help="scenario file")
    p_sim.add_argument("--trace", required=True, help="event-trace file")
    p_sim.add_argument("--ticks", type=int, required=True, help="number of ticks")
    p_sim.add_argument("--dt", type=int, default=1, help="tick width (default 1)")
    p_sim.add_argument(
        "--xml", action="store_true", help="emit frame XML instead of log lines"
    )

    p_check = sub.add_parser("check", help="parse and validate a file")
    p_check.add_argument("--kind", choices=["scenario", "trace"], required=True)
    p_check.add_argument("--file", required=True)

    return ap


def cmd_laws(seed: int, samples: int) -> int:
    cfg = SampleConfig(seed=seed, samples=samples)
    reports = run_all(TripleUnderTest(), cfg)
    for report in reports:
        print(render_report(report))
    return 0 if all(r.passed for r in reports) else 1


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def cmd_simulate(scenario_path: str, trace_path: str, ticks: int, dt: int, xml: bool) -> int:
    try:
        scenario_text = _read(scenario_path)
        trace_text = _read(trace_path)
    except OSError as exc:
        print(exc, file=sys.stderr)
        return 2
    try:
        sc = parse_scenario(scenario_text)
        trace = parse_trace(trace_text)
    except ParseError as exc:
        print(exc, file=sys.stderr)
        return 2
    if xml:
        for info in simulate_frames(sc, trace, ticks, dt):
            print(emit_frame_xml(info))
    else:
        for line in simulate(sc, trace, ticks, dt):
            print(line)
    return 0


def cmd_check(path: str, kind: str) -> int:
    try:
        text = _read(path)
    except OSError as exc:
        print(exc, file=sys.stderr)
        return 2
    try:
        if kind == "scenario":
            parse_scenario(text)
        else:
            parse_trace(text)
    except ParseError as exc:
        print(exc, file=sys.stderr)
        return 2
    print("OK")
    return 0


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    if args.command == "laws":
        if args.samples < 0:
            ap.error("--samples must be >= 0")
        if not 0 <= args.seed < 2**64:
            ap.error("--seed must fit an unsigned 64-bit integer")
        return cmd_laws(args.seed, args.samples)
    if args.command == "simulate":
        if args.ticks < 0:
            ap.error("--ticks must be >= 0")
        if args.dt < 1:
            ap.error("--dt must be >= 1")
        return cmd_simulate(args.scenario, args.trace, args.ticks, args.dt, args.xml)
    if args.command == "check":
        return cmd_check(args.file, args.kind)
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
