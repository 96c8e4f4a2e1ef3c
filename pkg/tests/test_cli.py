import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from grl.cli import main

ROOT = Path(__file__).resolve().parents[1]
SCEN = ROOT / "scenarios"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_integrate_example_iii(capsys):
    code, out, _ = run(capsys, "integrate", str(SCEN / "interval_square.json"), "--format", "structured")
    assert code == 0 and json.loads(out)["value"] == "1/3"


def test_integrate_zero_mu(capsys):
    code, out, _ = run(capsys, "integrate", str(SCEN / "zero_mu.json"), "--format", "structured")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == "0" and doc["integrable"] is True


def test_integrate_nonexistent_exits_zero(capsys):
    code, out, _ = run(capsys, "integrate", str(SCEN / "sqrt_distortion.json"), "--format", "structured")
    doc = json.loads(out)
    assert code == 0 and doc["integrable"] is False
    assert doc["diagnostics"]["envelope"]["verdict"] == "diverged"


def test_integrate_human(capsys):
    code, out, _ = run(capsys, "integrate", str(SCEN / "choquet_three.json"))
    assert code == 0 and "value: 9/5" in out


def test_input_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n "space": {"kind": "finite", "size": 1},\n "mu": {"masses": ["1/x"]},\n "nu": {"kind": "lebesgue"}, "f": ["1"]\n}')
    code, _, err = run(capsys, "integrate", str(bad))
    assert code == 2 and "line 3" in err
    code, _, err = run(capsys, "integrate", str(tmp_path / "missing.json"))
    assert code == 2


def test_classify_and_variation(capsys):
    code, out, _ = run(capsys, "classify", str(SCEN / "capacity_three.json"), "--format", "structured")
    assert code == 0 and json.loads(out)["monotone"] is True
    code, out, _ = run(capsys, "variation", str(SCEN / "capacity_three.json"), "0,2")
    assert code == 0 and out.strip() == "3/5"
    code, _, _ = run(capsys, "variation", str(SCEN / "capacity_three.json"), "0,9")
    assert code == 2


def test_examples_command(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0 and out.count("ok ") == 4


def test_verify_filtered(capsys):
    code, out, _ = run(capsys, "verify", "--theorems", "T16", "--instances", "50", "--seed", "7", "--no-controls")
    assert code == 0 and "T16,50,0,50,0" in out


def test_verify_structured_is_reproducible(capsys, tmp_path):
    args = ("verify", "--theorems", "T1,T6", "--instances", "20", "--seed", "5", "--format", "structured", "--no-clock")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--out", str(tmp_path / "s.csv"))
    assert a == b
    assert (tmp_path / "s.csv").read_text().startswith("id,instances")


def test_verify_reports_suite_failure(capsys):
    code, _, _ = run(capsys, "verify", "--theorems", "T15", "--instances", "50", "--no-controls")
    assert code == 1


@pytest.mark.parametrize("argv", [["verify", "--theorems", "bogus"], ["verify", "--instances", "0"], ["frobnicate"], []])
def test_usage_errors_exit_64(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 64


def test_sweep(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "sweep", str(SCEN / "constant_template.json"), "--param", "c=1,5/2", "--param", "mus=2", "--out", str(out_path))
    rows = list(csv.DictReader(io.StringIO(out_path.read_text())))
    assert code == 0 and [r["value"] for r in rows] == ["2", "5"]
    code, _, err = run(capsys, "sweep", str(SCEN / "constant_template.json"), "--param", "c=1")
    assert code == 64 and "mus" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "grl", "examples"], capture_output=True, text=True)
    assert proc.returncode == 0
