"""
Tests of the command-line interface.
"""

from __future__ import annotations

import json

import pytest

from updatron.updatron import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table(capsys, example1_path):
    code, out, _ = run(capsys, "table", example1_path, "--phi", "{}", "--phi", "1", "--phi", "2,3", "--phi", "{1,2,3}")
    lines = out.splitlines()

    assert code == 0
    assert lines[0] == "x f_x1 f_x2 f_x3 phi_{} phi_{1} phi_{2,3} phi_{1,2,3}"
    assert lines[1] == "000 1 0 1 000 100 001 101"
    assert lines[6] == "101 0 0 0 101 001 100 000"
    assert len(lines) == 9


def test_step(capsys, example1_path):
    assert run(capsys, "step", example1_path, "--mode", "memory:{1}", "--from", "101")[:2] == (0, "100 000\n")
    assert run(capsys, "step", example1_path, "--mode", "fully-async", "--from", "000")[1] == "000 001 100\n"
    assert run(capsys, "step", example1_path, "--mode", "parallel", "--from", "000", "--steps", "2")[1] == "000\n"


def test_step_json(capsys, example1_path):
    _, out, _ = run(capsys, "step", example1_path, "--mode", "interval", "--from", "000", "--format", "json")
    assert json.loads(out) == ["000", "001", "100", "101", "111"]


def test_reach(capsys, example1_path, ffl_path):
    assert run(capsys, "reach", example1_path, "--mode", "async", "--from", "000", "--to", "111")[:2] == (0, "no\n")
    assert run(capsys, "reach", example1_path, "--mode", "async", "--from", "000", "--to", "111", "--fail-on-no")[0] == 1

    code, out, _ = run(capsys, "reach", ffl_path, "--mode", "mp", "--from", "000", "--to", "111")
    assert code == 0
    assert out == "yes\n000 111\n"

    assert run(capsys, "reach", ffl_path, "--mode", "parallel", "--from", "000", "--to", "110")[1] == "yes\n000 100 110\n"


def test_graph(capsys, example1_path):
    _, out, _ = run(capsys, "graph", example1_path, "--mode", "parallel")
    assert out.splitlines()[0] == "000 -> 101"
    assert len(out.splitlines()) == 8

    _, out, _ = run(capsys, "graph", example1_path, "--mode", "parallel", "--no-loops")
    assert len(out.splitlines()) == 6

    _, out, _ = run(capsys, "graph", example1_path, "--mode", "bs:{2,3};{1}", "--format", "dot")
    assert out.startswith("digraph {")
    assert '"000" -> "001";' in out


def test_graph_json_is_deterministic(capsys, example1_path):
    first = run(capsys, "graph", example1_path, "--mode", "mp", "--format", "json")[1]
    second = run(capsys, "graph", example1_path, "--mode", "mp", "--format", "json")[1]

    assert first == second
    assert json.loads(first)["mode"] == "mp"


def test_attractors(capsys, example1_path):
    _, out, _ = run(capsys, "attractors", example1_path, "--mode", "parallel")

    assert out.splitlines() == [
        "limit cycle {000,101} attractor, basin {010,111}",
        "fixed point {011} attractor, basin {001}",
        "fixed point {100} attractor, basin {110}"
    ]

    _, out, _ = run(capsys, "attractors", example1_path, "--mode", "async", "--format", "json")
    assert [limit_set["configurations"] for limit_set in json.loads(out)["limit_sets"]] == [["011"], ["100"]]


def test_compare(capsys, example1_path):
    code, out, _ = run(capsys, "compare", example1_path, "--modes", "fully-async,async")

    assert code == 0
    assert out.splitlines()[0] == "fully-async subset async"
    assert out.splitlines()[1].startswith("only in async: 000->101")

    code, out, _ = run(capsys, "compare", example1_path, "--modes", "async,interval", "--no-loops", "--fail-on-no")
    assert code == 1
    assert out.splitlines() == ["async subset interval", "only in interval: 000->111 101->010"]

    assert run(capsys, "compare", example1_path, "--modes", "seq:3,1,2,seq:3,1,2")[1] == "seq:3,1,2 equal seq:3,1,2\n"


def test_check(capsys, example1_path):
    code, out, _ = run(capsys, "check", example1_path, "--fail-on-no")
    lines = out.splitlines()

    assert code == 0
    assert "(Interval fixed points): True" in lines
    assert "(Memory equivalence): True" in lines
    assert all(line.endswith("True") for line in lines if not line.startswith("(Observed)"))


def test_check_reports_mp_divergence(capsys, ffl_path):
    code, out, _ = run(capsys, "check", ffl_path, "--fail-on-no")
    [line] = [line for line in out.splitlines() if "MP formula decomposition" in line]

    assert code == 0
    assert line.startswith("(Observed) (MP formula decomposition): False [on {")
    assert "against union {" in line


def test_errors(capsys, example1_path, tmp_path):
    code, _, err = run(capsys, "step", example1_path, "--mode", "bs:{1,2};{2}", "--from", "000")
    assert code == 2
    assert err.startswith("error:")

    assert run(capsys, "step", example1_path, "--mode", "async", "--from", "0000")[0] == 2
    assert run(capsys, "graph", str(tmp_path / "missing.bn"), "--mode", "async")[0] == 2
    assert run(capsys, "compare", example1_path, "--modes", "async")[0] == 2
    assert run(capsys, "graph", example1_path, "--mode", "async", "--cap", "2")[0] == 2

    model = tmp_path / "broken.bn"
    model.write_text("a: b\n")
    code, _, err = run(capsys, "graph", str(model), "--mode", "async")
    assert code == 2
    assert "line 1, column 4" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["unknown"])
    assert info.value.code == 2

    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0


def test_show_time(capsys, example1_path):
    _, out, _ = run(capsys, "graph", example1_path, "--mode", "parallel", "--show-time")
    assert "# Total time:" in out
