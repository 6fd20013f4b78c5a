"""The command-line surface: flags, exit codes, output bytes."""

import json
import subprocess
import sys

import pytest

from fanoenum.cli import run
from fanoenum.table_oracle import emit, ground_truth


def test_verify_both_ranks(capsys):
    assert run(["verify"]) == 0
    out = capsys.readouterr().out
    assert "rho=2: all 36 rows match" in out
    assert "rho=3: all 4 rows match" in out


def test_verify_single_rank(capsys):
    assert run(["verify", "--rho", "3"]) == 0
    assert capsys.readouterr().out == "rho=3: all 4 rows match\n"


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["chern", "antican-cube-p1-bundle", "2", "0", "8"], "52"),
        (["chern", "antican-cube-divisor-p2-bundle", "9", "2", "9", "0", "-9", "0", "0"], "14"),
        (["chern", "genus-from-blowup", "16", "64", "4", "7"], "5"),
        (["chern", "conic-ksq-pullback", "-3", "5"], "7"),
        (["chern", "xi-square", "-3"], "-3"),
        (["chern", "exceptional-cube", "2"], "2"),
        (["chern", "antican-sq-dot-exceptional", "2", "0"], "4"),
    ],
)
def test_chern_evaluations(capsys, argv, expected):
    assert run(argv) == 0
    assert capsys.readouterr().out == expected + "\n"


def test_chern_engine_errors_exit_one(capsys):
    # odd cube violates the Riemann-Roch parity precondition
    assert run(["chern", "genus-from-blowup", "15", "64", "4", "7"]) == 1
    assert "error:" in capsys.readouterr().err


def test_enumerate_pair_filter(capsys):
    assert run(["enumerate", "--rho", "2", "--pair", "e1,c2", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert {(row["table_id"], row["kx3"]) for row in rows} == {("2-27", 38), ("2-31", 46)}


def test_pair_filter_spellings(capsys):
    assert run(["enumerate", "--pair", "C1,E3E4", "--format", "csv"]) == 0
    first = capsys.readouterr().out
    assert run(["enumerate", "--pair", "e3e4,c1", "--format", "csv"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert first.splitlines()[1].startswith("2-8,")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["enumerate", "--rho", "7"],
        ["enumerate", "--pair", "E1"],
        ["enumerate", "--pair", "E1,F7"],
        ["enumerate", "--format", "pdf"],
        ["chern", "antican-cube-p1-bundle", "2", "0"],
        ["chern", "no-such-formula", "1"],
        ["emit", "--source", "guesswork"],
    ],
)
def test_usage_errors_exit_two(argv):
    with pytest.raises(SystemExit) as excinfo:
        run(argv)
    assert excinfo.value.code == 2


def test_emit_to_file_is_deterministic(tmp_path):
    target = tmp_path / "table.csv"
    assert run(["emit", "--rho", "3", "--format", "csv", "--out", str(target)]) == 0
    first = target.read_bytes()
    assert first == emit(ground_truth(3), "csv")
    assert run(["emit", "--rho", "3", "--format", "csv", "--out", str(target)]) == 0
    assert target.read_bytes() == first


def test_emit_computed_agrees_with_truth(capsysbinary):
    assert run(["emit", "--rho", "2", "--source", "computed", "--format", "json"]) == 0
    computed = capsysbinary.readouterr().out
    assert run(["emit", "--rho", "2", "--source", "truth", "--format", "json"]) == 0
    truth = capsysbinary.readouterr().out
    assert computed == truth
    assert truth.endswith(b"\n")
    assert len(json.loads(truth)) == 36


def test_verify_reports_differences_from_doctored_truth(tmp_path, monkeypatch, capsys):
    rows = json.loads(emit(ground_truth(2), "json"))
    rows[0]["kx3"] += 2
    path = tmp_path / "truth.json"
    path.write_text(json.dumps(rows))
    monkeypatch.setenv("FANO_GROUND_TRUTH", str(path))
    assert run(["verify", "--rho", "2"]) == 1
    out = capsys.readouterr().out
    assert "rho=2: differences found" in out
    assert "2-1" in out


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "fanoenum", "enumerate", "--rho", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    lines = [line for line in proc.stdout.splitlines() if line]
    assert len(lines) == 2 + 4  # header, separator, four families
    assert lines[0] == "| no. | (-K)^3 | description | extremal rays |"
