from __future__ import annotations

import json

import pytest

from rcwb.cli import main

MODEL = """\
object X = { x0, x1 }
object Y = { y0, y1 }
map f : X -> Y { x0 -> y0 }
map g : X -> Y { x0 -> y1 }
"""


@pytest.fixture
def model_file(tmp_path):
    path = tmp_path / "model.rcwb"
    path.write_text(MODEL)
    return path


def test_eval_prints_a_table(model_file, capsys):
    assert main(["eval", str(model_file), "-e", "rest(f)"]) == 0
    assert capsys.readouterr().out.strip() == "X -> X { x0 -> x0 }"


def test_eval_in_calg(model_file, capsys):
    assert main(["eval", str(model_file), "-e", "rest(f)", "--model", "calg"]) == 0
    assert capsys.readouterr().out.strip() == "X -> X { 10 -> 10, 01 -> 00 }"


def test_eval_error_exits_two(model_file, capsys):
    assert main(["eval", str(model_file), "-e", "join(f, g)"]) == 2
    err = capsys.readouterr().err
    assert "1:1" in err and "Incompatible" in err


def test_parse_error_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.rcwb"
    bad.write_text("object X = { x0 }\nmap f : X -> X { x0 -> x7 }\n")
    assert main(["check", str(bad)]) == 2
    assert "2:" in capsys.readouterr().err


def test_usage_errors_exit_two(capsys):
    assert main([]) == 2
    assert main(["check", "builtin:demo", "--suite", "everything"]) == 2
    assert main(["check", "/no/such/file"]) == 2


def test_demo_passes_everything_at_size_two(capsys):
    assert main(["check", "builtin:demo", "--suite", "all", "--max-size", "2"]) == 0
    out = capsys.readouterr().out
    assert "summary: pass" in out and "fail 0" in out


def test_thm2_runs_only_thm2(capsys):
    assert main(["check", "builtin:demo", "--suite", "thm2", "--report", "records"]) == 0
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert records and {r["suite"] for r in records} == {"thm2"}


def test_mutated_fixture_exits_one(tmp_path, capsys):
    path = tmp_path / "mutant.rcwb"
    path.write_text("object A = { a0 }\nobject B = { b0, b1 }\nmutation bad-terminal\n")
    assert main(["check", str(path), "--suite", "axioms", "--max-size", "2", "--report", "records"]) == 1
    failed = [json.loads(line) for line in capsys.readouterr().out.splitlines() if '"fail"' in line]
    assert [r["law"] for r in failed] == ["terminal.total"]
    assert failed[0]["counterexample"]


def test_seed_is_reported(capsys):
    main(["check", "builtin:demo", "--suite", "axioms", "--max-size", "2", "--seed", "7", "--report", "records"])
    seeds = {json.loads(line)["seed"] for line in capsys.readouterr().out.splitlines()}
    assert seeds <= {None, 7}
