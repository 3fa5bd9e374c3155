import json
import os
import subprocess
import sys

import pytest

from superpbw.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normalize_basic(capsys):
    code, out, _ = run(capsys, "normalize", "--algebra", "sl2", "x[a]{t} x[-a]{1}")
    assert code == 0
    assert out.splitlines() == ["1 x[-a]{1} x[a]{t}", "+ 1 h[1]{t}"]


def test_normalize_isotropic_square(capsys):
    code, out, _ = run(capsys, "normalize", "--algebra", "sl21", "x[a2]{1}^2")
    assert code == 0
    assert out.strip() == "0"


def test_normalize_divided(capsys):
    code, out, _ = run(capsys, "normalize", "--algebra", "sl2", "--divided", "h[1]{t}^2")
    assert code == 0
    assert out.splitlines() == ["2 p[1]{t:2}", "- 1 p[1]{t^2:1}", "INTEGRAL: yes"]
    code, out, _ = run(capsys, "normalize", "--algebra", "sl2", "--divided",
                       "1/2 x[a]{t}")
    assert out.splitlines()[-1] == "INTEGRAL: no"


def test_normalize_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "normalize", "--algebra", "sl2", "x[zz]{t}")
    assert code == 2
    assert "unknown root label" in err
    code, _, err = run(capsys, "normalize", "--algebra", "nosuch", "x[a]{t}")
    assert code == 2


def test_normalize_deterministic(capsys):
    args = ("normalize", "--algebra", "sl21", "--monoid", "trunc:3",
            "x[a1]{t}^(2) x[-a1]{t}^(2) x[a2]{1}")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_verify_single_id(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "osp12", "--id", "4.8")
    assert code == 0
    assert "SUMMARY" in out and "fail=0" in out


def test_verify_inapplicable_gate(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "sl21", "--id", "4.11")
    assert code == 0
    assert "INAPPLICABLE" in out
    assert "pass=0" in out


def test_verify_fixed_params(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "sl3", "--id", "L4.4a",
                       "--r", "2", "--s", "2", "--a", "1", "--b", "1")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("CHECK")]
    assert lines and all("r=2" in l and "s=2" in l for l in lines)


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "--algebra", "sl2", "--id", "9.9")
    assert code == 2
    assert "unknown identity id" in err


def test_verify_config(tmp_path, capsys):
    config = {"algebras": ["sl2"], "identities": ["4.2"], "monoid": "trunc:2",
              "rmax": 1, "smax": 1, "chimax": 1, "integrality_trials": 3,
              "integrality_gens": 2, "basis_degree": 1}
    path = tmp_path / "suite.json"
    path.write_text(json.dumps(config))
    code, out, _ = run(capsys, "verify", "--config", str(path))
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("SUMMARY")


def test_basis_golden(capsys):
    code, out, _ = run(capsys, "basis", "--algebra", "sl21", "--monoid", "trunc:2",
                       "--degree", "2", "--order=-a1,-a2,-a1-a2,1,2,a1,a2,a1+a2")
    assert code == 0
    golden = open(os.path.join(DATA, "sl21_basis_deg2.txt")).read()
    assert out == golden


def test_basis_needs_finite_monoid(capsys):
    code, _, err = run(capsys, "basis", "--algebra", "sl2", "--monoid", "poly",
                       "--degree", "1")
    assert code == 2
    assert "truncated" in err


def test_pelem(capsys):
    code, out, _ = run(capsys, "pelem", "--algebra", "sl2", "--i", "1", "--chi", "t:2")
    assert code == 0
    assert out.splitlines() == ["1/2 h[1]{t}^2", "- 1/2 h[1]{t^2}"]
    code, out, _ = run(capsys, "pelem", "--algebra", "sl21", "--alpha", "a1+a2",
                       "--chi", "t:1")
    assert code == 0
    assert out.splitlines() == ["-1 h[1]{t}", "- 1 h[2]{t}"]


def test_delem(capsys):
    code, out, _ = run(capsys, "delem", "--algebra", "sl2", "--alpha", "a",
                       "--j", "2", "--k", "2", "--d", "t", "--c", "1")
    assert code == 0
    assert out.splitlines() == ["1 x[a]{1} x[a]{t^2}", "+ 1/2 x[a]{t}^2"]


def test_validate_spec_preset(capsys):
    code, out, _ = run(capsys, "validate-spec", "--algebra", "sl21")
    assert code == 0
    assert out.startswith("VALID sl21")


def test_validate_spec_file(capsys):
    code, out, _ = run(capsys, "validate-spec", "--algebra",
                       os.path.join(DATA, "sl2.alg"))
    assert code == 0
    assert "VALID" in out


def test_validate_spec_invalid_file(tmp_path, capsys):
    bad = (
        "cartan 1\nroots\n"
        "  a even 2 neg -a positive\n  -a even -2 neg a\n"
        "coroots\n  a 1\n  -a -1\n"
        "brackets\n"
        "  h1 x[a] = x[a] 1\n"       # wrong grading
        "  h1 x[-a] = x[-a] -2\n"
        "  x[a] x[-a] = h1 1\n")
    path = tmp_path / "bad.alg"
    path.write_text(bad)
    code, out, _ = run(capsys, "validate-spec", "--algebra", str(path))
    assert code == 1
    assert "VIOLATION" in out and "INVALID" in out


def test_load_algebra_file_for_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "--algebra",
                       os.path.join(DATA, "sl2.alg"), "x[a]{t} x[-a]{1}")
    assert code == 0
    assert "h[1]{t}" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "superpbw", "normalize", "--algebra", "sl2", "x[a]{t}"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 x[a]{t}"


def test_usage_error_exit_2():
    proc = subprocess.run([sys.executable, "-m", "superpbw", "normalize"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
