import json
import subprocess
import sys

import pytest

from rtgw.cli import CHECK_FAILED, INPUT_ERROR, OK, main

RECORD_KEYS = {"relation", "indices", "verdict", "lhs", "rhs"}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_comm_prints_h1(capsys):
    code, out, _ = run(capsys, "comm", "-d", "su3", "y11", "x11")
    assert code == OK
    assert out == "2*l11 - l21 - l22 + 1\n"


def test_comm_so3(capsys):
    code, out, _ = run(capsys, "comm", "-d", "so3", "l11", "x11")
    assert code == OK
    assert out.strip() == "x11"


@pytest.mark.parametrize("name", ["su3", "so3"])
def test_validate_builtin(capsys, name):
    code, out, _ = run(capsys, "validate", "-d", name)
    assert code == OK
    assert "FAIL" not in out


def test_validate_json_schema(capsys):
    code, out, _ = run(capsys, "validate", "-d", "so3", "--json")
    assert code == OK
    doc = json.loads(out)
    assert {"title", "passed", "records", "notes"} <= set(doc)
    assert doc["passed"] is True
    assert doc["records"]
    for rec in doc["records"]:
        assert set(rec) == RECORD_KEYS
        assert rec["verdict"] in ("PASS", "FAIL")


def test_verify_so3_passes(capsys):
    code, out, _ = run(capsys, "verify", "so3")
    assert code == OK


def test_verify_su3_reports_failures(capsys):
    # printed sign conventions that do not hold are reported, so the suite exits 1
    code, out, _ = run(capsys, "verify", "su3", "--json")
    assert code == CHECK_FAILED
    doc = json.loads(out)
    keys = {frozenset(r) for r in doc["records"]}
    assert keys == {frozenset(RECORD_KEYS)}
    failing = {r["relation"] for r in doc["records"] if r["verdict"] == "FAIL"}
    assert "sl3_table" in failing
    assert not any(r.startswith("validate") or r.startswith("tgwa") for r in failing)


def test_nf(capsys, su3):
    code, out, _ = run(capsys, "nf", "-d", "su3", "y11*x11")
    assert code == OK
    assert out.strip() == str(su3.t[0]) == "l11^2 - l11*l21 - l11*l22 + l21*l22 + 2*l11 - l21 - l22 + 1"
    code, out, _ = run(capsys, "nf", "-d", "su3", "x11 + y11", "--json")
    doc = json.loads(out)
    assert sorted(tuple(t["grade"]) for t in doc["terms"]) == [(-1, 0, 0), (1, 0, 0)]


def test_invariant(capsys):
    code, out, _ = run(capsys, "invariant", "-d", "su3", "x11 + y11")
    assert code == OK
    code, out, _ = run(capsys, "invariant", "-d", "su3", "x11")
    assert code == CHECK_FAILED
    assert "FAIL" in out


@pytest.mark.parametrize("argv", [
    ["nf", "-d", "su3", "x11 +"],
    ["nf", "-d", "su3", "1/(l11+l21+1)"],
    ["nf", "-d", "su3", "x11^-1"],
    ["nf", "-d", "su3", "q11"],
    ["comm", "-d", "nosuch", "x11", "y11"],
    ["comm", "-d", "su3", "y11"],
    ["verify", "sl4"],
    ["casimir", "4"],
    ["frobnicate"],
])
def test_input_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == INPUT_ERROR


def test_bad_datum_file(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, err = run(capsys, "validate", "-d", str(p))
    assert code == INPUT_ERROR
    assert "error" in err
    p.write_text(json.dumps({"q": 1, "zeta": [1], "var_names": ["1"], "blocks": [[0]],
                             "t": ["l1 +"], "mu_xx": [["1"]], "mult_set": ["l1"]}))
    code, _, err = run(capsys, "validate", "-d", str(p))
    assert code == INPUT_ERROR
    assert "t[0]" in err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "rtgw.cli", "comm", "-d", "su3", "y11", "x11"],
                          capture_output=True, text=True)
    assert proc.returncode == OK
    assert proc.stdout == "2*l11 - l21 - l22 + 1\n"
