import json
from pathlib import Path

import pytest

from poishom.cli import main

DOCS = Path(__file__).resolve().parent.parent / "docs"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_shipped_document(capsys):
    code, out, err = run(capsys, "check", str(DOCS / "potential-x2z.json"))
    assert code == 0
    assert "label: potential-x2z" in out
    assert "jacobi: ok" in out
    assert "unimodular: yes" in out
    assert err == ""


def test_trace_command(capsys):
    code, out, _ = run(capsys, "trace", str(DOCS / "log-canonical-3.json"))
    assert code == 0
    assert "trace x: 2*x" in out
    assert "trace y: 0" in out
    assert "trace z: -2*z" in out
    assert "unimodular: no" in out


def test_homology_grid(capsys):
    code, out, _ = run(capsys, "catalog", "run", "symplectic-plane",
                       "homology", "--max-weight", "3")
    assert code == 0
    assert "homology dimensions (canonical), weights 0..3" in out
    assert "n\\w" in out


def test_homology_tsv_golden(capsys):
    code, out, _ = run(capsys, "catalog", "run", "symplectic-plane",
                       "homology", "--max-weight", "2", "--tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n\tw\tdim"
    assert "2\t2\t1" in lines
    assert all(len(line.split("\t")) == 3 for line in lines)


def test_cohomology_includes_negative_weights(capsys):
    code, out, _ = run(capsys, "catalog", "run", "symplectic-plane",
                       "cohomology", "--max-weight", "1", "--tsv")
    assert code == 0
    assert "0\t-2\t0" in out.splitlines()


def test_duality_pass(capsys):
    code, out, _ = run(capsys, "duality", str(DOCS / "weighted-line.json"),
                       "--max-weight", "5")
    assert code == 0
    assert "expected shift: 3" in out
    assert "result: PASS" in out


def test_duality_trivial_window_zero(capsys):
    code, out, _ = run(capsys, "catalog", "run", "trivial-1",
                       "duality", "--max-weight", "0")
    assert code == 0
    assert "fitting shifts: 1" in out
    assert "result: PASS" in out


def test_pbw_command(capsys):
    code, out, _ = run(capsys, "pbw", str(DOCS / "log-canonical-3.json"),
                       "--samples", "30", "--nu")
    assert code == 0
    assert "confluence: ok (30 words)" in out
    assert "graded dimensions: ok" in out
    assert "twist: ok" in out


def test_pbw_nu_refused_off_log_canonical(capsys):
    code, out, err = run(capsys, "pbw", str(DOCS / "potential-x2z.json"), "--nu")
    assert code == 2
    assert "log-canonical" in err


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    ids = [line.split()[0] for line in out.splitlines()]
    assert "so3" in ids
    assert "potential-x2z" in ids
    code2, out2, _ = run(capsys, "catalog", "list")
    assert code2 == 0
    assert out2 == out


def test_catalog_run_unknown_id(capsys):
    code, _, err = run(capsys, "catalog", "run", "nope", "check")
    assert code == 2
    assert "nope" in err


def test_catalog_run_unknown__command(capsys):
    code, _, err = run(capsys, "catalog", "run", "so3", "paint")
    assert code == 2
    assert "catalog run expects" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "check", "/no/such/file.json")
    assert code == 2
    assert "error:" in err


def test_malformed_document(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vars": ["x", "y"], "bracket": {"x,y": "q"}}')
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2
    assert "unknown variable" in err


def test_jacobi_failure_exits_one(tmp_path, capsys):
    doc = {"vars": ["x", "y", "z"],
           "bracket": {"x,y": "y", "y,z": "z", "z,x": "x"}}
    path = tmp_path / "nojacobi.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "check", str(path))
    assert code == 1
    assert "jacobi" in err


def test_inhomogeneous_refused_for_homology(tmp_path, capsys):
    doc = {"vars": ["x", "y"], "bracket": {"x,y": "x + 1"}}
    path = tmp_path / "mixed.json"
    path.write_text(json.dumps(doc))
    code, _, _ = run(capsys, "check", str(path))
    assert code == 0
    code, _, err = run(capsys, "homology", str(path))
    assert code == 2
    assert "homogeneous" in err


def test_output_is_deterministic(capsys):
    first = run(capsys, "catalog", "run", "log-canonical-3", "duality",
                "--max-weight", "4")
    second = run(capsys, "catalog", "run", "log-canonical-3", "duality",
                 "--max-weight", "4")
    assert first == second
    assert first[0] == 0
