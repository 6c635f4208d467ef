import re
from pathlib import Path

import pytest

from statethread.cli import main

DATA = Path(__file__).parent / "data"
SCENARIO = str(DATA / "birds.scenario")
TRACE = str(DATA / "jump3.trace")

FIXTURE_LINES = [
    "t=0 birds[0]",
    "t=1 birds[0]",
    "t=2 birds[1]",
    "t=3 birds[1] +overlay[0]",
    "t=4 birds[2] +overlay[1]",
    "t=5 birds[2]",
]


def test_laws_all_pass(capsys):
    code = main(["laws", "--seed", "42", "--samples", "300"])
    out, err = capsys.readouterr()
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert len(lines) == 7
    assert all(re.match(r"^LAW [a-z_]+ PASS checked=300 counterexamples=0$", l) for l in lines)


def test_laws_zero_samples_vacuous(capsys):
    code = main(["laws", "--samples", "0"])
    out, _ = capsys.readouterr()
    assert code == 0
    assert all("PASS checked=0" in l for l in out.splitlines())


def test_laws_negative_samples_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["laws", "--samples", "-3"])
    assert exc.value.code == 2
    out, err = capsys.readouterr()
    assert out == ""
    assert "usage" in err


def test_laws_oversized_seed_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["laws", "--seed", str(2**64)])
    assert exc.value.code == 2


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_simulate_fixture(capsys):
    code = main(
        ["simulate", "--scenario", SCENARIO, "--trace", TRACE, "--ticks", "6", "--dt", "1"]
    )
    out, err = capsys.readouterr()
    assert code == 0
    assert err == ""
    assert out == "".join(line + "\n" for line in FIXTURE_LINES)


def test_simulate_zero_ticks(capsys):
    code = main(["simulate", "--scenario", SCENARIO, "--trace", TRACE, "--ticks", "0"])
    out, err = capsys.readouterr()
    assert code == 0
    assert out == ""
    assert err == ""


def test_simulate_xml(capsys):
    code = main(
        ["simulate", "--scenario", SCENARIO, "--trace", TRACE, "--ticks", "4", "--xml"]
    )
    out, _ = capsys.readouterr()
    assert code == 0
    assert out.splitlines() == [
        '<frame t="0"><layer name="birds" index="0"/></frame>',
        '<frame t="1"><layer name="birds" index="0"/></frame>',
        '<frame t="2"><layer name="birds" index="1"/></frame>',
        '<frame t="3"><layer name="birds" index="1"/><overlay since="3" index="0"/></frame>',
    ]


def test_simulate_malformed_scenario(tmp_path, capsys):
    bad = tmp_path / "bad.scenario"
    bad.write_text("layer birds 2 4\n")
    code = main(["simulate", "--scenario", str(bad), "--trace", TRACE, "--ticks", "3"])
    out, err = capsys.readouterr()
    assert code == 2
    assert out == ""
    assert "missing trigger_duration" in err
    assert err.startswith("parse error at line ")


def test_simulate_missing_file(capsys):
    code = main(["simulate", "--scenario", "no-such.scenario", "--trace", TRACE, "--ticks", "3"])
    out, err = capsys.readouterr()
    assert code == 2
    assert out == ""
    assert "no-such.scenario" in err


def test_simulate_rejects_bad_dt():
    with pytest.raises(SystemExit) as exc:
        main(["simulate", "--scenario", SCENARIO, "--trace", TRACE, "--ticks", "3", "--dt", "0"])
    assert exc.value.code == 2


def test_check_scenario_ok(capsys):
    code = main(["check", "--kind", "scenario", "--file", SCENARIO])
    out, err = capsys.readouterr()
    assert code == 0
    assert out == "OK\n"
    assert err == ""


def test_check_trace_ok(capsys):
    code = main(["check", "--kind", "trace", "--file", TRACE])
    out, _ = capsys.readouterr()
    assert code == 0
    assert out == "OK\n"


def test_check_invalid_trace(tmp_path, capsys):
    bad = tmp_path / "bad.trace"
    bad.write_text("jump 5\njump 3\n")
    code = main(["check", "--kind", "trace", "--file", str(bad)])
    out, err = capsys.readouterr()
    assert code == 2
    assert out == ""
    assert "non-increasing jump tick 3" in err


def test_check_missing_file(capsys):
    code = main(["check", "--kind", "trace", "--file", "missing.trace"])
    out, err = capsys.readouterr()
    assert code == 2
    assert out == ""
    assert err != ""


def test_laws_failure_exit_code(monkeypatch, capsys):
    # swap the real binder for a broken one: the command must report FAIL
    # lines and exit 1 (not 2, which is reserved for usage/parse errors)
    import statethread.cli as cli
    from statethread.laws import MUTANT_TRIPLES

    monkeypatch.setattr(cli, "TripleUnderTest", lambda: MUTANT_TRIPLES["state_dropping_bind"])
    code = main(["laws", "--samples", "100"])
    out, _ = capsys.readouterr()
    assert code == 1
    assert "FAIL" in out
    assert any(line.startswith("  CE inputs=") for line in out.splitlines())
