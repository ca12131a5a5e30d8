import io
import json
import subprocess
import sys

import pytest

from hopfkit.cli import parse_structure, run
from hopfkit.errors import StructureError
from fractions import Fraction


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_transform(capsys):
    assert call(capsys, "transform", "1,2,6,24,120,720") == (0, "1,1,3,13,71,461\n", "")


def test_json_in_json_out(capsys):
    code, out, _ = call(capsys, "transform", '["1","2","6"]')
    assert json.loads(out) == ["1", "1", "3"]


def test_csv(capsys):
    code, out, _ = call(capsys, "inverse", "1,0,0", "--format", "csv")
    assert out == "n,value\n1,1\n2,1\n3,1\n"


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1,2,3,5,8\n"))
    assert call(capsys, "transform", "-")[1] == "1,1,0,0,0\n"


def test_hadamard_transform(capsys):
    code, out, _ = call(capsys, "hadamard-transform", "1,1,3,13", "1,1,3,13")
    assert (code, out) == (0, "1,3,29,499\n")
    for method in ("enumerate", "transform"):
        assert call(capsys, "hadamard-transform", "1,1,3", "1,1,3", "--method", method)[1] == "1,3,29\n"


def test_feasibility_fibonacci(capsys):
    code, out, _ = call(capsys, "feasibility", "1,2,3,5,8")
    data = json.loads(out)
    assert code == 1
    assert data["conditions"]["cubic"]["pass"] is False
    assert data["conditions"]["boolean_nonneg"]["pass"] is True


def test_feasibility_pass(capsys):
    code, out, _ = call(capsys, "feasibility", "1,2,6,24", "--format", "plain")
    assert code == 0
    assert "boolean_nonneg: pass" in out and "not sufficient" in out


def test_feasibility_csv(capsys):
    code, out, _ = call(capsys, "feasibility", "1,2,3", "--format", "csv")
    assert out.splitlines()[0] == "condition,pass,witness"


def test_min_next(capsys):
    assert call(capsys, "min-next", "1,2,3")[:2] == (0, "5\n")
    assert json.loads(call(capsys, "min-next", "1,2,3", "--format", "json")[1]) == {"min_next": "5"}


def test_dims(capsys):
    assert call(capsys, "dims", "--species", "free(star(X,X))", "--n", "4")[1] == "1,1,4,36,576\n"
    out = call(capsys, "dims", "--species", "L", "--n", "3", "--format", "json")[1]
    assert json.loads(out) == {"order": 3, "coeffs": ["1", "1", "2", "6"]}


def test_typegf(capsys):
    assert call(capsys, "typegf", "--species", "Pi", "--n", "5")[1] == "1,1,2,3,5,7\n"
    assert call(capsys, "typegf", "--species", "star(X,X)", "--n", "4", "--method", "burnside")[1] == "0,1,1,3,13\n"


def test_basis(capsys):
    out = call(capsys, "basis", "--species", "L", "--n", "2")[1]
    assert out == "(1,2)\n(2,1)\n"
    assert json.loads(call(capsys, "basis", "--species", "X", "--n", "2", "--format", "json")[1]) == []


def test_verify_L_passes(capsys):
    code, out, _ = call(capsys, "verify", "--structure", "L", "--q", "0", "--n", "3")
    assert code == 0
    assert "compat: pass" in out


def test_verify_mock_even(capsys):
    code, out, _ = call(capsys, "verify", "--structure", "mock-even", "--n", "4", "--format", "json")
    data = json.loads(out)
    assert code == 1
    assert {f["axiom"] for f in data["failures"]} == {"compat"}
    assert all(f["I"] == [1, 2, 3, 4] for f in data["failures"])


def test_verify_axiom_subset(capsys):
    code, out, _ = call(capsys, "verify", "--structure", "L-corrupt", "--n", "3", "--axioms", "monoid")
    assert code == 1 and "assoc: FAIL" in out
    assert call(capsys, "verify", "--structure", "L", "--axioms", "bogus")[0] == 2


def test_verify_hadamard_parameters(capsys):
    code, out, _ = call(capsys, "verify", "--structure", "hadamard(L@2,L@1/2)", "--n", "3")
    assert code == 0 and "q=1 " in out


def test_parse_structure():
    assert parse_structure("free(Eplus)", Fraction(2)).q == 2
    assert parse_structure("hadamard(L@-1,L@2)", Fraction(1)).q == -2
    with pytest.raises(StructureError):
        parse_structure("E", Fraction(2))


def test_oracle(capsys):
    assert call(capsys, "oracle", "atomic", "--n", "6")[1] == "1,1,2,6,22,92\n"
    assert call(capsys, "oracle", "bell", "--n", "4")[1] == "1,2,5,15\n"
    assert call(capsys, "oracle", "ordered-bell", "--n", "4")[1] == "1,3,13,75\n"
    assert call(capsys, "oracle", "indecomposable", "--n", "4", "--species", "star(X,X)")[1] == "1,3,29,499\n"


@pytest.mark.parametrize("argv", [
    ["transform", "1,x"],
    ["dims", "--species", "Y", "--n", "2"],
    ["dims", "--species", "L", "--n", "10"],
    ["dims", "--species", "L", "--n", "-1"],
    ["verify", "--structure", "L", "--q", "1/0"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_max_n_override(capsys):
    assert call(capsys, "dims", "--species", "free(X)", "--n", "10", "--max-n", "10")[0] == 0
    assert call(capsys, "dims", "--species", "free(X)", "--n", "13", "--max-n", "13")[0] == 2


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("HOPFKIT_MAX_N", "3")
    assert call(capsys, "dims", "--species", "L", "--n", "4")[0] == 2


def test_module_entry_point_is_reproducible():
    argv = [sys.executable, "-m", "hopfkit", "feasibility", "1,2,3,5,8"]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.returncode == 1
    assert first.stdout == second.stdout and first.stdout.endswith("\n")
