import json
import os
import subprocess
from decimal import Decimal

import pytest

CLI = os.environ.get("LPZERO_CLI", "lpzero")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def ok(*args):
    p = run(*args)
    assert p.returncode == 0, p.stderr + p.stdout
    return json.loads(p.stdout)


def test_envelope_fields():
    doc = ok("eval", "--family", "eulerF", "--a", "4", "--z", "-5", "--tol", "1e-14", "--format", "json")
    assert list(doc) == ["command", "inputs", "result", "error_bounds", "runtime_ms", "tool_version"]
    assert doc["command"] == "eval"
    assert doc["inputs"]["z_re"] == -5.0
    # exact rational sum of 60 terms, computed with fractions
    from fractions import Fraction

    term, total, z = Fraction(1), Fraction(1), Fraction(-5)
    for k in range(1, 60):
        term = term * z / (4**k + 1)
        total += term
    assert abs(doc["result"]["value"] - float(total)) <= doc["error_bounds"]["abs_error_bound"] + 1e-16
    assert doc["error_bounds"]["abs_error_bound"] < 1e-13


def test_complex_point_and_section():
    doc = ok("eval", "--family", "theta", "--a", "2", "--z", "1,1")
    assert doc["result"]["value_imag"] != 0.0
    doc = ok("section", "--family", "eulerF", "--a", "4", "--n", "1", "--z", "-5")
    assert abs(doc["result"]["value"]) < 1e-15


def test_classify_and_sign_test():
    doc = ok("classify", "--a", "3.95", "--format", "json")
    assert doc["result"]["verdict"] == "NotInLP"
    assert doc["result"]["criterion"] == "sign_test_Fa"
    assert "witness_x" in doc["result"]
    doc = ok("classify", "--a", "3")
    assert doc["result"]["criterion"] == "necessary_q2"
    doc = ok("sign-test", "--family", "theta", "--a", "2", "--n", "2")
    assert doc["result"]["verdict"] == "Boundary"


def test_zeros():
    doc = ok("zeros", "--a", "4", "--radius", "rho:5")
    assert doc["result"]["count"] == 5
    assert doc["result"]["certified"] is True
    doc = ok("zeros", "--a", "4", "--radius", "3.4", "--samples", "512")
    assert doc["result"]["count"] == 2


def test_constants():
    doc = ok("constants", "--name", "q_infinity", "--tol", "1e-6")
    assert doc["result"]["lo"] <= 3.233636 <= doc["result"]["hi"]
    doc = ok("constants", "--name", "c_n", "--n", "2", "--tol", "1e-20")
    assert doc["inputs"]["precision"] == "mpfr100"
    lo, hi = Decimal(doc["result"]["lo_decimal"]), Decimal(doc["result"]["hi_decimal"])
    assert lo <= 4 <= hi and hi - lo <= Decimal("1e-20")
    p = run("constants", "--name", "thresholds", "--format", "csv")
    lines = p.stdout.strip().splitlines()
    assert lines[0].startswith("name,polynomial,computed")
    assert len(lines) == 7


def test_csv_tables():
    p = run("quotients", "--family", "theta", "--a", "2", "--n-max", "5", "--format", "csv")
    assert p.returncode == 0
    rows = [r.split(",") for r in p.stdout.strip().splitlines()]
    assert rows[0] == ["n", "p", "q"]
    assert all(float(r[2]) == 4.0 for r in rows[2:])
    p = run("scan-conjecture", "--a-lo", "3.9", "--a-hi", "4.0", "--steps", "11", "--format", "csv")
    assert p.stdout.count("InLP") >= 1 and p.returncode == 0


def test_verify_and_fixture_seed():
    doc = ok("verify", "--lemma", "rouche")
    assert doc["result"]["passed"] is True
    doc = ok("verify", "--lemma", "4algebra", "--seed", "3")
    assert doc["result"]["passed"] is True
    p = run("verify", "--lemma", "2", "--a-grid", "3.57:4.6:5", "--format", "csv")
    assert p.returncode == 0 and "true" in p.stdout


def test_determinism():
    a = ok("verify", "--lemma", "4algebra", "--seed", "9")
    b = ok("verify", "--lemma", "4algebra", "--seed", "9")
    a.pop("runtime_ms")
    b.pop("runtime_ms")
    assert json.dumps(a) == json.dumps(b)


def test_out_file(tmp_path):
    out = tmp_path / "r.json"
    p = run("quotients", "--family", "eulerF", "--a", "3", "--n-max", "3", "--out", str(out))
    assert p.returncode == 0 and p.stdout == ""
    assert json.loads(out.read_text())["result"]["rows"][1]["q"] == pytest.approx(2.5)


@pytest.mark.parametrize(
    "args",
    [
        ["frobnicate"],
        ["eval", "--family", "bogus", "--a", "4", "--z", "1"],
        ["eval", "--family", "eulerF", "--a", "4", "--z", "1", "--tol", "0"],
        ["eval", "--family", "eulerF", "--a", "4", "--z", "x,y"],
        ["classify", "--a", "4", "--format", "csv"],
        ["constants", "--name", "c_n"],
        ["verify", "--lemma", "2", "--a-grid", "4:3"],
        ["zeros", "--a", "4", "--radius", "rho:x"],
    ],
)
def test_usage_errors(args):
    p = run(*args)
    assert p.returncode == 2
    assert p.stderr


def test_computation_error():
    p = run("classify", "--a", "0.5")
    assert p.returncode == 1
    doc = json.loads(p.stdout)
    assert doc["error"]["kind"] == "parameter_domain"
    p = run("zeros", "--a", "5", "--radius", "rho:0")
    assert p.returncode == 1
