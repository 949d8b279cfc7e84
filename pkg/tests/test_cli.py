import io
import json
import subprocess
import sys

import pytest

from chainsym.cli import run
from chainsym.io import chain_map_to_json, dumps, load_complex, two_morphism_to_json
from chainsym.complexes import ChainMap
from chainsym.twocat import TwoMorphism

from conftest import FIXTURES


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def fx(name):
    return FIXTURES / f"{name}.json"


def test_pi0_ex1():
    code, out, _ = call("pi0", fx("ex1_k2"))
    rep = json.loads(out)
    assert code == 0 and rep["pi0"]["description"] == "Z*_4 (order 2)"


def test_theorem_verify_split_exact():
    code, out, _ = call("theorem-verify", fx("split_exact_f2"))
    rep = json.loads(out)
    assert code == 0 and rep["theorem"] == "pass"
    assert rep["pi0"]["order"] == 1 and rep["pi1"]["order"] == 1


def test_theorem_verify_not_applicable():
    code, out, _ = call("theorem-verify", fx("ex1_k2"))
    assert code == 2 and json.loads(out)["theorem"] == "not-applicable"


def test_oracle_check_fixture():
    code, out, _ = call("oracle-check", "--seed", 7, fx("random_split_f2"))
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_oracle_check_budget_unresolved():
    code, out, _ = call("oracle-check", "--budget", 1, fx("random_split_f2"))
    assert code == 2 and json.loads(out)["status"] == "unresolved"


@pytest.mark.parametrize("argv", [["frobnicate", "x.json"], ["pi0"], ["pi0", "/nonexistent.json"],
                                  ["pi0", "--format", "xml", "a.json"], ["pi0", "--budget", "-1"]])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 3 and out == "" and err


def test_parse_error_reports_degree():
    code, _, err = call("homology", fx("bad_dd"))
    assert code == 3 and "d_0" in err


def test_empty_complex():
    code, out, _ = call("homology", fx("empty"))
    assert code == 0 and json.loads(out)["homology"] == {}


@pytest.mark.parametrize("cmd,name", [("analyze", "gl_epi_f2"), ("homology", "ex1_k3"),
                                      ("split-check", "ex1_k1"), ("normal-form", "gl_monic_f2"),
                                      ("pi1", "zero_diff_f2"), ("action", "zero_diff_f3"),
                                      ("sinh", "zero_diff_f3"),
                                      ("oracle-check", "zero_diff_f2")])
def test_deterministic_output(cmd, name):
    first = call(cmd, "--seed", 5, fx(name))
    second = call(cmd, "--seed", 5, fx(name))
    assert first == second
    assert first[0] == 0
    json.loads(first[1])


def test_split_check_certificate():
    code, out, _ = call("split-check", fx("ex1_k1"))
    rep = json.loads(out)
    assert rep["split"] is False and rep["reason"] == "no splitting maps exist"
    assert rep["failed_degree"] == 0


def test_action_agrees_with_conjugation():
    code, out, _ = call("action", fx("zero_diff_f3"))
    assert code == 0 and json.loads(out)["action_table"]["conjugation_agrees"] is True


def test_sinh_cli():
    code, out, _ = call("sinh", fx("zero_diff_f3"))
    rep = json.loads(out)
    assert code == 0 and rep["pass"]
    assert rep["cohomologous_to_zero"]["linear"] is True
    assert call("sinh", fx("ex1_k1"))[0] == 2


def test_text_format():
    code, out, err = call("pi0", "--format", "text", fx("gl_iso_f2"))
    assert code == 0 and out and not out.lstrip().startswith("{")


def test_compose(tmp_path):
    A = load_complex(fx("zero_diff_f2"))
    ident = TwoMorphism(ChainMap.identity(A))
    cell = tmp_path / "cell.json"
    cell.write_text(dumps(two_morphism_to_json(ident)))
    code, out, _ = call("compose", "--input", fx("zero_diff_f2"), "--input", fx("zero_diff_f2"),
                        "--input", fx("zero_diff_f2"), "--cell", cell, "--cell", cell)
    rep = json.loads(out)
    assert code == 0 and rep["variants_homotopic"] is True
    assert rep["codomain"] == chain_map_to_json(ChainMap.identity(A))
    code, out, _ = call("compose", "--vertical", "--input", fx("zero_diff_f2"), "--input",
                        fx("zero_diff_f2"), "--cell", cell, "--cell", cell)
    assert code == 0


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chainsym", "pi1", str(fx("zero_diff_f2"))],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["pi1"]["order"] == 2
