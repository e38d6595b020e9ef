from fractions import Fraction as F
import json
import pathlib
import subprocess
import sys

import pytest

from stieltjes.cli import main

SAMPLES = pathlib.Path(__file__).resolve().parent.parent / "samples"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_integrate_text(capsys):
    code, out, _ = run(capsys, "integrate", "x^2", "x + heaviside(c=1, at=1/3)", "--on", "[0,1]")
    assert code == 0
    assert "rds = 4/9" in out and "~ 0.444444444444444" in out


def test_compare_json(capsys):
    code, out, _ = run(capsys, "compare", "heaviside(c=1/3, at=0)", "heaviside(c=1/5, at=0)",
                       "--on", "[-1,1]", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["rds"]["value"] == "1/3" and rec["ds"]["value"] == "4/5"
    assert F(rec["discrepancy"]) == F(1, 3) - F(4, 5)


def test_text_and_json_agree(capsys):
    args = ("sums", "mrs", "heaviside(c=1, at=0)", "heaviside(c=1, at=0)", "--on", "[-1,1]")
    _, text, _ = run(capsys, *args)
    _, js, _ = run(capsys, *args, "--format", "json")
    rows = json.loads(js)["rows"]
    assert [r["gap"] for r in rows] == ["1", "1", "1"]
    for r in rows:
        assert f"{r['intervals']:>9}  {r['gap']}" in text


def test_enclosure_method(capsys):
    code, out, _ = run(capsys, "integrate", "x^2", "x + heaviside(c=1, at=1/3)", "--on", "[0,1]",
                       "--method", "enclosure", "--tol", "1/100", "--format", "json")
    rec = json.loads(out)["rds"]
    assert code == 0 and rec["kind"] == "enclosure" and rec["converged"]
    assert F(rec["lo"]) <= F(4, 9) <= F(rec["hi"]) and F(rec["hi"]) - F(rec["lo"]) <= F(1, 100)


def test_decompose_with_seed(capsys):
    code, out, _ = run(capsys, "decompose", "x - 2*heaviside(c=1, at=1/2)", "--on", "[0,1]",
                       "--seed", "7", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["variation"] == "3" and rec["bv_norm"] == "9/2"
    assert rec["right"] == [{"at": "1/2", "weight": "-2"}]
    assert rec["spot_checks"]["ok"]


def test_parts_and_check(capsys):
    code, out, _ = run(capsys, "parts", "heaviside(c=1/3, at=0)", "heaviside(c=1/2, at=0)", "--on", "[-1,1]")
    assert code == 0 and "lhs = 5/6" in out and "rhs = 5/6" in out and "holds = yes" in out
    code, out, _ = run(capsys, "check", "dirichlet", "x", "--on", "[0,1]")
    assert code == 0 and "integrable = no (G-measure of [0,1] is 1)" in out


def test_run_file_preserves_query_order(capsys):
    code, out, _ = run(capsys, "run", str(SAMPLES / "heaviside.stj"), "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["command"] for r in recs] == ["compare", "sums"]


def test_diagnostic_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.stj"
    bad.write_text("let f = heaviside(c=2")
    code, _, err = run(capsys, "run", str(bad))
    assert code == 2 and f"{bad}:1:22:" in err
    code, _, err = run(capsys, "integrate", "x +", "x", "--on", "[0,1]")
    assert code == 2 and "program was:" in err


def test_engine_error_exit_code(capsys):
    code, _, err = run(capsys, "sums", "mrs", "x", "(-x)", "--on", "[0,1]")
    assert code == 3 and "error[E_NOT_INCREASING]" in err
    code, _, err = run(capsys, "integrate", "dirichlet", "x", "--on", "[0,1]")
    assert code == 3 and "error[" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "run", str(tmp_path / "nope.stj"))
    assert code == 3 and "cannot read" in err


def test_bad_rational_flag(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["integrate", "x", "x", "--on", "[0,1]", "--tol", "abc"])
    assert ei.value.code == 2


def test_stdin_and_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stieltjes", "run", "-", "--format", "json"],
        input=b"let f = x; integrate f df on [0,1];", capture_output=True, check=False,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["rds"]["value"] == "1/2"


def test_deterministic_output(capsys):
    args = ("compare", "x^3", "x + heaviside(c=1/2, at=1/4)", "--on", "[0,1]", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_table_family(capsys):
    code, out, _ = run(capsys, "table", "x^n", "x + heaviside(c=1, at=1/2)", "--on", "[0,1]",
                       "--upto", "30", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0 and [F(r["value"]) for r in rows] == [F(1, n + 1) + F(1, 2**n) for n in range(31)]
