"""End-to-end checks of the command-line tool; INFPOT_CLI points at the built
binary."""

import json
import math
import os
import subprocess

import pytest

CLI = os.environ["INFPOT_CLI"]


def run(*args, check=True):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(f"{args} failed ({proc.returncode}): {proc.stderr}")
    return proc


def test_eval_center():
    out = run("eval", "1", "1").stdout
    assert "u: 1" in out
    assert "region: center" in out
    assert "grad: undefined" in out


def test_eval_median_and_diagonal():
    out = run("eval", "1", "0.3").stdout
    u = float(out.splitlines()[0].split(":")[1])
    assert u == pytest.approx(0.3, abs=1e-15)
    assert "region: median" in out
    js = json.loads(run("eval", "0.5", "0.5", "--format", "json").stdout)
    assert js["region"] == "diagonal"
    assert js["u"] == pytest.approx(0.39605789702998401, abs=1e-10)
    assert js["hessian"] is None


def test_eval_interior_json_has_hessian():
    js = json.loads(run("eval", "0.3", "0.7", "--format", "json").stdout)
    assert js["region"] == "interior-off-diagonal"
    det = js["hessian"][0][0] * js["hessian"][1][1] - js["hessian"][0][1] ** 2
    assert det == pytest.approx(-0.20209419773620137, abs=1e-8)


def test_domain_error_exit_code():
    proc = run("eval", "3", "0", check=False)
    assert proc.returncode == 2
    assert "[0,2]" in proc.stderr


def test_unknown_flag_rejected():
    proc = run("eval", "1", "1", "--frobnicate", check=False)
    assert proc.returncode == 2


def test_grid_csv(tmp_path):
    out = tmp_path / "grid.csv"
    run("grid", "--nx", "5", "--ny", "5", "--out", str(out))
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "x,y,u,ux,uy,region"
    assert len(lines) == 26
    rows = [ln.split(",") for ln in lines[1:]]
    by_xy = {(float(r[0]), float(r[1])): r for r in rows}
    # corners carry zero value; symmetry holds pairwise
    assert float(by_xy[(0.0, 0.0)][2]) == 0.0
    assert by_xy[(0.0, 0.0)][5] == "boundary"
    assert float(by_xy[(1.0, 1.0)][2]) == 1.0
    for (x, y), row in by_xy.items():
        assert float(row[2]) == pytest.approx(float(by_xy[(y, x)][2]), abs=1e-13)
    # ordering: y is the slow index
    assert float(rows[0][0]) == 0.0 and float(rows[1][0]) == 0.5
    assert float(rows[0][1]) == 0.0 and float(rows[5][1]) == 0.5


def test_grid_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run("grid", "--nx", "7", "--ny", "7", "--out", str(a))
    run("grid", "--nx", "7", "--ny", "7", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_diagonal_csv():
    lines = run("diagonal", "--n", "5").stdout.strip().splitlines()
    assert lines[0] == "s,u,g"
    first = lines[1].split(",")
    last = lines[-1].split(",")
    assert float(first[1]) == 0.0
    assert float(last[1]) == pytest.approx(1.0, abs=1e-12)
    assert float(last[2]) == 1.0


def test_theta_both_forms():
    out = run("theta", "0.3", "0.25").stdout
    vals = [float(line.split(":")[1]) for line in out.strip().splitlines()]
    assert vals[0] == pytest.approx(vals[1], abs=1e-13)
    assert vals[0] == pytest.approx(1.4060172781921949, abs=1e-13)


def test_verify_series_suite_passes():
    proc = run("verify", "--suite", "series")
    doc = json.loads(proc.stdout)
    assert doc["all_pass"] is True
    names = [c["name"] for c in doc["suites"][0]["checks"]]
    assert any("theta2" in n for n in names)


def test_verify_analysis_includes_disproof():
    doc = json.loads(run("verify", "--suite", "analysis").stdout)
    names = [c["name"] for c in doc["suites"][0]["checks"]]
    assert any("d_max" in n for n in names)


def test_oracle_small():
    doc = json.loads(run("oracle", "--n", "33", "--stencil-radius", "2").stdout)
    assert doc["n"] == 33
    assert doc["sup_gap"] < 0.2
    assert doc["l2_gap"] <= doc["sup_gap"]


def test_grid_json(tmp_path):
    out = tmp_path / "grid.json"
    run("grid", "--nx", "9", "--ny", "9", "--format", "json", "--out", str(out))
    arr = json.loads(out.read_text())
    assert len(arr) == 81
    center = [s for s in arr if s["region"] == "center"]
    assert len(center) == 1 and center[0]["u"] == 1.0 and center[0]["grad"] is None
    interior = [s for s in arr if s["region"] == "interior-off-diagonal"]
    assert interior and all(s["hessian"] is not None for s in interior)
    assert all(s["hessian"] is None for s in arr if s["region"] != "interior-off-diagonal")


def test_diagonal_json():
    arr = json.loads(run("diagonal", "--n", "9", "--format", "json").stdout)
    assert len(arr) == 9
    assert arr[0]["u"] == 0.0 and arr[-1]["g"] == 1.0
    gs = [row["g"] for row in arr]
    assert gs == sorted(gs)


def test_oracle_json_export(tmp_path):
    out = tmp_path / "fd.json"
    run("oracle", "--n", "33", "--stencil-radius", "2", "--format", "json",
        "--out", str(out))
    doc = json.loads(out.read_text())
    assert len(doc["gaps"]) == 33 * 33
    assert max(abs(g) for g in doc["gaps"]) == pytest.approx(doc["sup_gap"])


def test_tolerance_flags_accepted_after_subcommand():
    proc = run("eval", "0.3", "0.7", "--abs-tol", "1e-14", "--root-tol", "1e-12")
    assert "region: interior-off-diagonal" in proc.stdout
