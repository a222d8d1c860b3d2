from __future__ import annotations

import json
import subprocess
import sys

import pytest

from shiftcolor import read_instance
from shiftcolor.cli import main
from shiftcolor.harness import COLUMNS, parse_metrics, read_workload


@pytest.fixture(autouse=True)
def _no_out_dir(monkeypatch):
    monkeypatch.delenv("SHIFTCOLOR_OUT_DIR", raising=False)


def test_gen_workload_to_stdout(capsys):
    assert main(["gen-workload", "--n", "20", "--delta", "3", "--ops", "50", "--seed", "4"]) == 0
    first = capsys.readouterr().out
    assert main(["gen-workload", "--n", "20", "--delta", "3", "--ops", "50", "--seed", "4"]) == 0
    assert capsys.readouterr().out == first
    header, ops = read_workload(first)
    assert header["seed"] == "4" and len(ops) == 50


def test_run_generated_workload(tmp_path):
    out = tmp_path / "m.json"
    argv = ["run", "--n", "60", "--delta", "4", "--c", "2", "--engine", "delta-minus-2", "--ops", "400",
            "--verify-every", "50", "--check-recourse", "--format", "json", "--out", str(out)]  # fmt: skip
    assert main(argv) == 0
    doc = json.loads(out.read_text())
    assert doc["aggregates"]["ops"] == 400 and doc["aggregates"]["violations"] == 0


def test_run_from_workload_file(tmp_path):
    wl = tmp_path / "w.txt"
    assert main(["gen-workload", "--n", "300", "--delta", "4", "--model", "forest", "--ops", "299", "--out", str(wl)]) == 0
    out = tmp_path / "m.csv"
    argv = ["run", "--workload", str(wl), "--delta", "4", "--c", "2", "--engine", "no-handler",
            "--alpha", "1", "--epsilon", "1", "--out", str(out)]  # fmt: skip
    assert main(argv) == 0
    text = out.read_bytes()
    assert text.splitlines()[0].decode() == ",".join(COLUMNS)
    assert len(parse_metrics(text).records) == 299


def test_large_palette_with_auto_and_explicit_b(tmp_path):
    for b in ("auto", "5"):
        out = tmp_path / f"m{b}.csv"
        argv = ["run", "--n", "50", "--delta", "7", "--c", "5", "--b", b, "--ops", "300", "--out", str(out)]
        assert main(argv) == 0
        assert parse_metrics(out.read_bytes()).aggregates()["ops"] == 300


def test_instances_oracle_and_verify(tmp_path, capsys):
    inst = tmp_path / "sep.txt"
    assert main(["gen-instance", "separation", "--n", "40", "--delta", "3", "--c", "0", "--out", str(inst)]) == 0
    g, meta = read_instance(inst.read_text())
    assert g.n == 40 and meta["kind"] == "separation"
    assert main(["oracle", "min", str(inst)]) == 0
    assert capsys.readouterr().out == "exact 2\n"
    assert main(["oracle", "min-shift", str(inst)]) == 0
    assert capsys.readouterr().out == "exact 9\n"
    assert main(["oracle", "min-shift", str(inst), "--budget", "4"]) == 0
    assert capsys.readouterr().out == "atleast 5\n"
    assert main(["verify", str(inst)]) == 0
    assert capsys.readouterr().out == "ok\n"
    assert main(["verify", str(inst), "--allow-uncolored", "0"]) == 1
    assert capsys.readouterr().out.startswith("violation ")


def test_lower_bound_instance(tmp_path):
    inst = tmp_path / "lb.txt"
    argv = ["gen-instance", "lower-bound", "--n", "300", "--delta", "4", "--c", "1", "--alpha", "1", "--out", str(inst)]
    assert main(argv) == 0
    g, meta = read_instance(inst.read_text())
    assert len(g.uncolored_edges()) == 1 and "floor" in meta


def test_default_names_under_out_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SHIFTCOLOR_OUT_DIR", str(tmp_path))
    assert main(["gen-workload", "--n", "10", "--delta", "3", "--ops", "5"]) == 0
    assert main(["gen-instance", "separation", "--n", "40", "--delta", "3"]) == 0
    assert main(["run", "--n", "10", "--delta", "4", "--c", "2", "--engine", "delta-minus-2", "--ops", "5"]) == 0
    assert main(["oracle", "min", str(tmp_path / "separation.txt")]) == 0
    names = {p.name for p in tmp_path.iterdir()}
    assert {"workload.txt", "separation.txt", "metrics.csv", "oracle-min.txt"} <= names
    assert (tmp_path / "oracle-min.txt").read_text() == "exact 2\n"
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize(
    "argv,kind",
    [
        (["run", "--n", "10", "--delta", "4", "--c", "2", "--engine", "large-palette"], "config"),
        (["gen-workload", "--n", "5", "--delta", "2", "--ops", "9", "--model", "forest"], "workload"),
        (["gen-instance", "lower-bound", "--n", "100", "--delta", "2"], "config"),
        (["oracle", "min", "/nonexistent/inst.txt"], "io"),
    ],
)
def test_error_line_and_status(argv, kind, capsys):
    assert main(argv) == 1
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and err[0].startswith(f"error: {kind}: ")


def test_bad_instance_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 3\ndelta 2\nbogus line\n")
    assert main(["verify", str(bad)]) == 1
    assert capsys.readouterr().err.startswith("error: format: ")


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "shiftcolor", "gen-workload", "--n", "8", "--delta", "2", "--ops", "3"],
        capture_output=True, text=True, check=False,
    )  # fmt: skip
    assert res.returncode == 0
    assert res.stdout.startswith("# workload model=random-cap n=8")
