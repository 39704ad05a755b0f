"""End-to-end command-line behavior, including the exit-code contract:
0 ok, 1 bad configuration, 2 I/O failure, 3 censored runs under
--strict-budget."""

import json

import pytest

from mvsemo.cli import main
from mvsemo.harness import RUNS_CSV_HEADER, derive_run_seed


def invoke(tmp_path, *extra, out="out"):
    argv = [
        "--problem", "gomm",
        "--algo", "semo",
        "--n", "4",
        "--r", "3",
        "--runs", "3",
        "--seed", "5",
        "--out", str(tmp_path / out),
    ]
    argv.extend(extra)
    return main(argv)


def read_rows(path):
    lines = path.read_text().splitlines()
    assert lines[1] == RUNS_CSV_HEADER
    return [line.split(",") for line in lines[2:]]


def test_happy_path(tmp_path, capsys):
    assert invoke(tmp_path) == 0
    out = capsys.readouterr().out
    assert "gomm semo n=4 r=3" in out
    rows = read_rows(tmp_path / "out" / "runs.csv")
    assert len(rows) == 3
    assert rows[0][5] == str(derive_run_seed(5, 0, 0))
    assert (tmp_path / "out" / "summary.csv").exists()


def test_comma_lists_cross_product(tmp_path):
    code = main([
        "--problem", "gomm,glotz",
        "--algo", "semo,strict",
        "--n", "3,4",
        "--r", "2,3",
        "--runs", "1",
        "--out", str(tmp_path / "out"),
    ])
    assert code == 0
    rows = read_rows(tmp_path / "out" / "runs.csv")
    # benchmarks outermost, then variants, then n-major (n, r) pairs
    assert [(row[0], row[1], row[2], row[3]) for row in rows[:4]] == [
        ("gomm", "semo", "3", "2"),
        ("gomm", "semo", "3", "3"),
        ("gomm", "semo", "4", "2"),
        ("gomm", "semo", "4", "3"),
    ]
    assert len(rows) == 2 * 2 * 4
    assert rows[8][0] == "glotz"


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "problem=gomm\nalgo=semo\nn=4\nr=3\nruns=2\nseed=9\n"
        f"out={tmp_path / 'from_config'}\n"
    )
    assert main(["--config", str(cfg), "--runs", "4"]) == 0
    rows = read_rows(tmp_path / "from_config" / "runs.csv")
    assert len(rows) == 4  # the flag beat the file
    assert rows[0][5] == str(derive_run_seed(9, 0, 0))


def test_missing_required_setting_is_config_error(tmp_path, capsys):
    assert main(["--problem", "gomm", "--algo", "semo", "--n", "4", "--r", "3"]) == 1
    assert "missing required setting: out" in capsys.readouterr().err


def test_unknown_problem_is_config_error(tmp_path, capsys):
    assert invoke(tmp_path, "--problem", "ackley") == 1
    assert "unknown problem" in capsys.readouterr().err


def test_unknown_config_key_is_config_error(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("problem=gomm\nalgo=semo\nn=4\nr=3\nout=o\nbudget=7\n")
    assert main(["--config", str(cfg)]) == 1
    assert "unknown config keys: budget" in capsys.readouterr().err


def test_invalid_n_is_config_error(tmp_path):
    assert invoke(tmp_path, "--n", "0") == 1
    assert invoke(tmp_path, "--r", "1") == 1
    assert invoke(tmp_path, "--n", "4,,5") == 1


def test_duplicate_variant_is_config_error(tmp_path):
    assert invoke(tmp_path, "--algo", "semo,semo") == 1


def test_malformed_flag_value_exits_one(tmp_path):
    with pytest.raises(SystemExit) as info:
        invoke(tmp_path, "--runs", "many")
    assert info.value.code == 1


def test_missing_config_file_is_io_error(tmp_path, capsys):
    assert main(["--config", str(tmp_path / "absent.cfg")]) == 2
    assert "i/o error" in capsys.readouterr().err


def test_unwritable_output_is_io_error(tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    assert invoke(tmp_path, "--out", str(blocker / "nested"), out="ignored") == 2
    assert "i/o error" in capsys.readouterr().err


def test_strict_budget_reports_censoring(tmp_path, capsys):
    # a one-iteration budget cannot cover any front with n*(r-1)+1 >= 2 points
    code = invoke(tmp_path, "--budget-multiplier", "1e-9", "--strict-budget")
    assert code == 3
    assert "censored" in capsys.readouterr().err
    rows = read_rows(tmp_path / "out" / "runs.csv")
    assert all(row[-1] == "1" for row in rows)


def test_censoring_without_strict_budget_still_succeeds(tmp_path):
    assert invoke(tmp_path, "--budget-multiplier", "1e-9") == 0


def test_trace_flag_writes_jsonl(tmp_path):
    assert invoke(tmp_path, "--trace-every", "1") == 0
    lines = (tmp_path / "out" / "trace.jsonl").read_text().splitlines()
    assert lines
    row = json.loads(lines[0])
    assert row["iter"] == 0 and {"pop", "dpf", "g"} <= set(row)


def test_threads_env_fallback_keeps_results(tmp_path, monkeypatch):
    assert invoke(tmp_path, "--threads", "1", out="a") == 0
    monkeypatch.setenv("MVSEMO_THREADS", "2")
    assert invoke(tmp_path, out="b") == 0
    body = lambda name: (tmp_path / name / "runs.csv").read_text().splitlines()[1:]
    assert body("a") == body("b")


def test_bad_threads_env_is_config_error(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("MVSEMO_THREADS", "lots")
    assert invoke(tmp_path) == 1
    assert "MVSEMO_THREADS" in capsys.readouterr().err
