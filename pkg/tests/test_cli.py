"""
Тесты командной строки
"""
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

from lacunary.cli import cli, run


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)


def invoke(runner: CliRunner, *args: str):
    return runner.invoke(cli, list(args))


def test_eval_g(runner):
    result = invoke(runner, "eval", "--a", "2", "--x", "0.5", "--what", "g")
    assert result.exit_code == 0
    assert result.stdout == "2.0813689810\n"


def test_eval_decimals(runner):
    result = invoke(runner, "--decimals", "4", "eval", "--a", "2", "--x", "0.5", "--what", "g")
    assert result.exit_code == 0
    assert result.stdout == "2.0814\n"

    result = invoke(runner, "eval", "--a", "2", "--x", "0.5", "--what", "g", "--decimals", "3")
    assert result.stdout == "2.081\n"


def test_eval_json(runner):
    result = invoke(runner, "eval", "--a", "2", "--x", "0.5", "--what", "g", "--format", "json")
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    assert document["meta"]["what"] == "g"
    assert document["columns"] == ["g"]
    assert document["rows"][0]["g"] == pytest.approx(2.0813689810056077, rel=1e-15)
    assert document["display"][0]["g"] == "2.0813689810"


@pytest.mark.parametrize("what", ["f", "delta", "delta0", "dominant", "oracle"])
def test_eval_targets(runner, what):
    result = invoke(runner, "eval", "--a", "2", "--x", "0.7", "--what", what)
    assert result.exit_code == 0
    float(result.stdout)


def test_eval_delta_routes_agree(runner):
    delta = invoke(runner, "--decimals", "17", "eval", "--a", "2", "--x", "0.5", "--what", "delta")
    oracle = invoke(runner, "--decimals", "17", "eval", "--a", "2", "--x", "0.5", "--what", "oracle")
    assert float(delta.stdout) == pytest.approx(float(oracle.stdout), abs=1e-10)


def test_table_first_row(runner):
    result = invoke(runner, "table", "--a", "2", "--count", "33", "--format", "csv")
    assert result.exit_code == 0
    lines = result.stdout.split("\n")
    assert lines[-1] == ""
    lines = lines[:-1]
    assert len(lines) == 34
    assert lines[0] == "n,x_delta,x_delta0,rel_err"

    n, x_delta, x_delta0, rel_err = lines[1].split(",")
    assert n == "0"
    assert float(x_delta) == pytest.approx(0.4659328665, abs=1e-8)
    assert float(x_delta0) == pytest.approx(0.2362862900, abs=1e-8)
    assert rel_err == "0.4299957"
    assert len(x_delta.split(".")[1]) == 10


def test_table_ladder(runner):
    result = invoke(runner, "table", "--a", "2", "--count", "3", "--ladder")
    assert result.exit_code == 0
    rows = [line.split(",") for line in result.stdout.splitlines()[1:]]
    assert float(rows[1][2]) == pytest.approx(0.4599728568, abs=1e-8)
    assert float(rows[2][2]) == pytest.approx(0.6181431450, abs=1e-8)


def test_table_json(runner):
    result = invoke(runner, "table", "--a", "2", "--count", "4", "--format", "json")
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    assert document["columns"][:4] == ["n", "x_delta", "x_delta0", "rel_err"]
    assert "s_delta0" in document["columns"]
    assert len(document["rows"]) == 4
    for values, display in zip(document["rows"], document["display"]):
        assert float(display["x_delta"]) == pytest.approx(values["x_delta"], abs=1e-10)


def test_zeros_json(runner):
    result = invoke(runner, "zeros", "--a", "3", "--target", "delta0", "--count", "5", "--format", "json")
    assert result.exit_code == 0
    rows = json.loads(result.stdout)["rows"]
    xs = [row["x"] for row in rows]
    assert len(xs) == 5
    assert all(b > a for a, b in zip(xs, xs[1:]))


@pytest.mark.parametrize("target", ["delta", "dominant"])
def test_zeros_targets(runner, target):
    result = invoke(runner, "zeros", "--a", "2", "--target", target, "--count", "3")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "n,x,w,s"
    assert len(lines) == 4


def test_sweep_points(runner):
    result = invoke(runner, "sweep", "--a", "2", "--from", "0.2", "--to", "0.9", "--points", "7")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "x,f,g,delta,delta0"
    assert len(lines) == 8
    assert lines[1].startswith("0.2000000000,")
    assert lines[-1].startswith("0.9000000000,")


def test_sweep_log_w(runner):
    result = invoke(
        runner, "sweep", "--a", "2", "--from", "0.95", "--to", "0.999999", "--points", "5", "--log-w", "--format", "json"
    )
    assert result.exit_code == 0
    rows = json.loads(result.stdout)["rows"]
    assert len(rows) == 5
    assert rows[0]["x"] == 0.95
    assert rows[-1]["x"] == 0.999999


def test_characters(runner):
    result = invoke(runner, "characters", "--a", "2")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "k,theta,modulus,phase,arg"
    assert [line.split(",")[0] for line in lines[1:]] == ["1", "2", "3"]
    assert float(lines[1].split(",")[2]) == pytest.approx(4.946e-6, rel=1e-3)


def test_table_deep_rows_in_w_form(runner):
    result = invoke(runner, "table", "--a", "2", "--count", "200")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "n,x_delta,x_delta0,rel_err,w_delta,w_delta0,s_delta0"
    assert len(lines) == 201

    n, _, x_delta0, _, w_delta, w_delta0, s_delta0 = lines[-1].split(",")
    assert n == "199"
    assert x_delta0 == "1.0000000000"
    assert 0.0 < float(w_delta0) < 1e-12
    assert float(w_delta) == pytest.approx(float(w_delta0), rel=1e-9)
    assert float(s_delta0) == pytest.approx(math.log(float(w_delta0)), abs=1e-8)


def test_zeros_for_large_base(runner):
    result = invoke(runner, "zeros", "--a", "1e10", "--count", "3", "--format", "json")
    assert result.exit_code == 0, result.stderr
    rows = json.loads(result.stdout)["rows"]
    assert len(rows) == 3
    assert all(upper["s"] > lower["s"] for upper, lower in zip(rows, rows[1:]))



def test_output_is_deterministic(runner):
    args = ("table", "--a", "2", "--count", "8")
    assert invoke(runner, *args).stdout == invoke(runner, *args).stdout


@pytest.mark.parametrize(
    "args",
    [
        ("eval", "--a", "1", "--x", "0.5", "--what", "g"),
        ("eval", "--a", "2", "--x", "1.5", "--what", "f"),
        ("table", "--a", "2", "--count", "0"),
        ("sweep", "--a", "2", "--from", "0.9", "--to", "0.2", "--points", "5"),
        ("eval", "--a", "2", "--x=-3", "--what", "delta0"),
        ("eval", "--a", "2", "--x", "1.5", "--what", "dominant"),
        ("eval", "--a", "2", "--x", "0", "--what", "delta0"),
    ],
)
def test_domain_errors_exit_1(runner, args):
    result = invoke(runner, *args)
    assert result.exit_code == 1
    assert result.stdout == ""
    lines = result.stderr.splitlines()
    assert len(lines) == 1
    assert lines[0].startswith("error: domain: ")


@pytest.mark.parametrize(
    "args",
    [
        ("--bogus",),
        ("eval", "--a", "2"),
        ("eval", "--a", "2", "--x", "0.5", "--what", "h"),
        ("--decimals", "18", "eval", "--a", "2", "--x", "0.5"),
        ("--eps", "0.1", "eval", "--a", "2", "--x", "0.5"),
        ("table", "--a", "2", "--count", "3", "--format", "xml"),
    ],
)
def test_usage_errors_exit_2(runner, args):
    result = invoke(runner, *args)
    assert result.exit_code == 2
    assert result.stdout == ""
    assert result.stderr


def test_run_exit_codes(capsys):
    assert run(["eval", "--a", "2", "--x", "0.5", "--what", "g"]) == 0
    assert capsys.readouterr().out == "2.0813689810\n"

    assert run(["eval", "--a", "0.5", "--x", "0.5"]) == 1
    assert capsys.readouterr().err.startswith("error: domain: ")

    assert run(["--bogus"]) == 2


def test_module_entry_point():
    root = Path(__file__).resolve().parents[1]
    completed = subprocess.run(
        [sys.executable, "-m", "lacunary", "eval", "--a", "2", "--x", "0.5", "--what", "g"],
        capture_output=True,
        text=True,
        cwd=root,
    )
    assert completed.returncode == 0, completed.stderr
    assert completed.stdout == "2.0813689810\n"
