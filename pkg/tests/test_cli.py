import json
import subprocess
import sys

import pytest

from jonesrep.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim(capsys):
    assert call(capsys, "dim", "--n", "6", "--d", "0")[:2] == (0, "5\n")


def test_dim_parity_error(capsys):
    code, out, err = call(capsys, "dim", "--n", "5", "--d", "0")
    assert code == 2 and out == "" and err


def test_missing_flags_is_usage_error(capsys):
    assert call(capsys, "dim", "--n", "6")[0] == 2


def test_braid_syntax_error(capsys):
    code, _, err = call(capsys, "matrix", "--n", "3", "--d", "1", "--braid", "s1 (")
    assert code == 2 and "offset 4" in err


def test_at_and_frac_are_exclusive(capsys):
    code, _, _ = call(capsys, "matrix", "--n", "3", "--d", "1", "--braid", "s1", "--at", "1", "--A-frac", "3/40")
    assert code == 2


def test_symbolic_matrix(capsys):
    code, out, _ = call(capsys, "matrix", "--n", "2", "--d", "0", "--braid", "s1", "--format", "json")
    assert code == 0
    assert json.loads(out)["entries"] == [[{"-3": "-1"}]]


def test_scan_brown(capsys):
    code, out, _ = call(capsys, "scan", "--braid", "@brown", "--n", "6", "--d", "0", "--grid", "512")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,sr" and len(lines) == 513
    x, sr = lines[-1].split(",")
    assert float(x) == 1.0 and abs(float(sr) - 1) < 1e-6


def test_scan_is_deterministic(capsys):
    argv = ["scan", "--braid", "@lt4", "--n", "4", "--d", "2", "--grid", "64"]
    first = call(capsys, *argv)[1]
    assert call(capsys, *argv, "--workers", "3")[1] == first


def test_order_report(capsys):
    code, out, _ = call(capsys, "order-report", "--braid", "s1 s2 s3^-1", "--n", "6", "--d", "0", "--levels", "7..8")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["k"] for r in rows] == [7, 8]
    assert rows[1]["verdict"] == "infinite_order" and abs(rows[1]["sr"] - 1.665) < 1e-3
    assert set(rows[0]) == {"k", "N", "d", "A", "sr", "verdict"}


def test_stretch(capsys):
    code, out, _ = call(capsys, "stretch", "--braid", "@lt3", "--surface", "one-boundary")
    assert code == 0 and abs(float(out) - 2.618033988749895) < 1e-9


def test_verify_theorems(capsys):
    code, out, _ = call(capsys, "verify", "theorems", "--max-n", "9")
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert reports and all(r["ok"] for r in reports)


def test_verify_equivariance_closed(capsys):
    code, out, _ = call(capsys, "verify", "equivariance", "--n", "6", "--d", "0", "--surface", "closed")
    assert code == 0 and json.loads(out.splitlines()[0])["ok"]


def test_homology_json(capsys):
    code, out, _ = call(capsys, "homology", "--braid", "@brown", "--surface", "closed", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["matrix"] == [[int(i == j) for j in range(4)] for i in range(4)]
    assert data["relation"] == [-1, 0, -1, 0]


def test_catalog(capsys):
    code, out, _ = call(capsys, "catalog")
    assert code == 0 and len(out.splitlines()) == 8
    assert call(capsys, "catalog", "nope")[0] == 2


def test_out_flag(tmp_path, capsys):
    path = tmp_path / "basis.txt"
    code, out, _ = call(capsys, "basis", "--n", "4", "--d", "0", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text() == "(1 2)(3 4)\n(1 4)(2 3)\n"


def test_no_files_without_out(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    call(capsys, "scan", "--braid", "@lt3", "--n", "3", "--d", "1", "--grid", "8")
    assert list(tmp_path.iterdir()) == []


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "jonesrep", "dim", "--n", "8", "--d", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "14\n"


def test_verification_failure_exit_code(monkeypatch, capsys):
    from jonesrep import cli

    monkeypatch.setattr(cli, "verify_equivariance", lambda n, d, kind: {"check": "equivariance", "ok": False})
    assert call(capsys, "verify", "equivariance", "--n", "5", "--d", "1")[0] == 3


def test_computation_failure_exit_code(monkeypatch, capsys):
    from jonesrep import cli

    def boom(*a, **k):
        raise cli.EigenvalueError("no convergence", [])

    monkeypatch.setattr(cli, "stretch_estimate", boom)
    assert call(capsys, "stretch", "--braid", "@lt3", "--surface", "one-boundary")[0] == 1
