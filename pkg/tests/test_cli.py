import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from superbrackets.cli import run_command
from superbrackets import higher_poisson_bracket, format_poly

from common import FIXTURE_DIR, e, M2, f1


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def fx(name):
    return FIXTURE_DIR / name


SCHEMA = json.loads(resources.files("superbrackets").joinpath("report_schema.json").read_text())


@pytest.mark.parametrize("name", ["f1.gb", "f2.gb", "f3.gb", "f4.gb"])
def test_verify_fixtures_pass(name):
    code, out, err = run("verify", fx(name))
    assert code == 0, out
    assert "FAIL" not in out
    assert err == ""


@pytest.mark.parametrize("name", ["f1.gb", "f2.gb", "f3.gb", "f4.gb"])
def test_check_master_fixtures(name):
    assert run("check-master", fx(name))[0] == 0


def test_odd_structure_exit_3():
    code, out, err = run("check-master", fx("bad_odd.gb"))
    assert code == 3
    assert "structure must be even" in err
    assert out == ""
    assert run("verify", fx("bad_odd.gb"))[0] == 3


def test_master_violation_exit_3():
    assert run("check-master", fx("bad_master.gb"))[0] == 3
    assert run("verify", fx("bad_master.gb"))[0] == 3
    assert run("bracket", fx("bad_master.gb"), "--kind", "ks")[0] == 3


def test_form_as_structure_exit_3(tmp_path):
    f = tmp_path / "form.gb"
    f.write_text("manifold { even x } let P = d(x)*s(x)")
    code, _, err = run("verify", f)
    assert code == 3


def test_bracket_poisson_prints_value():
    code, out, _ = run("bracket", fx("f1.gb"), "--kind", "poisson", "--args", "x,y")
    assert code == 0
    expected = higher_poisson_bracket(f1(), [e(M2, "x"), e(M2, "y")])
    assert out.strip() == format_poly(expected) == "-1"


def test_bracket_ks_and_schouten():
    assert run("bracket", fx("f1.gb"), "--kind", "ks", "--args", "x,d(y)")[1].strip() == "1"
    assert run("bracket", fx("f3.gb"), "--kind", "ks")[1].strip() == "d(x)"
    code, out, _ = run("bracket", fx("f4.gb"), "--kind", "schouten", "--args", "(x+y)*d(x),d(y)")
    assert code == 0 and out.strip()


def test_usage_and_parse_errors_exit_1(tmp_path):
    assert run()[0] == 1
    assert run("frobnicate", fx("f1.gb"))[0] == 1
    assert run("verify", tmp_path / "missing.gb")[0] == 1
    assert run("bracket", fx("f1.gb"), "--kind", "nope", "--args", "x")[0] == 1
    assert run("bracket", fx("f1.gb"), "--kind", "poisson", "--args", "x,z")[0] == 1
    assert run("bracket", fx("f1.gb"), "--kind", "poisson", "--args", "d(x)")[0] == 1
    bad = tmp_path / "bad.gb"
    bad.write_text("manifold { even x }\nlet P = s(x)^2\n")
    code, _, err = run("verify", bad)
    assert code == 1
    assert "2:" in err
    nop = tmp_path / "nop.gb"
    nop.write_text("manifold { even x } let Q = x")
    assert run("verify", nop)[0] == 1


def test_quiet_prints_nothing():
    code, out, err = run("verify", fx("f1.gb"), "--quiet")
    assert code == 0 and out == "" and err == ""


@pytest.mark.parametrize("argv", [
    ["verify", "f2.gb", "--json", "--seed", "7"],
    ["--json", "jacobiator", "f3.gb", "--kind", "ks", "--order", "2", "--trials", "4"],
    ["bracket", "f1.gb", "--kind", "poisson", "--args", "x,y", "--json"],
    ["symbol", "f4.gb", "--json"],
    ["check-master", "f1.gb", "--json"],
])
def test_json_documents_validate(argv):
    argv = [str(fx(a)) if a.endswith(".gb") else a for a in argv]
    code, out, _ = run(*argv)
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["passed"] == all(c["passed"] for c in doc["checks"])
    # round trip
    assert json.loads(json.dumps(doc)) == doc


def test_json_is_stable_under_seed():
    a = run("verify", fx("f4.gb"), "--json", "--seed", "11")[1]
    b = run("verify", fx("f4.gb"), "--json", "--seed", "11")[1]
    c = run("verify", fx("f4.gb"), "--json", "--seed", "12")[1]
    assert a == b
    assert a != c
    names = [ch["name"] for ch in json.loads(a)["checks"]]
    assert names == sorted(names)


def test_symbol_command():
    code, out, _ = run("symbol", fx("f1.gb"))
    assert code == 0
    assert "K_P = p(x)*pi(y) - p(y)*pi(x)" in out
    assert "PASS" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "superbrackets", "check-master",
                           str(fx("bad_odd.gb"))], capture_output=True, text=True)
    assert proc.returncode == 3
    assert "structure must be even" in proc.stderr
