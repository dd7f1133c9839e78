from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from rshall.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_mul_example():
    code, out, _ = run("mul", "--rank", "2", "u[1,1]", "u[2,2]")
    assert code == EXIT_OK
    assert out.strip() == "s*u([1,1]+[2,2]) + s*u[1,2]"


def test_mul_identity():
    assert run("mul", "--rank", "2", "u0", "u[1,1]")[1].strip() == "u[1,1]"


def test_mul_with_coefficients_and_torus():
    code, out, _ = run("mul", "k[1,0]", "u[2,2]")
    assert code == EXIT_OK
    assert out.strip() == "k[1,0]*u[2,2]"
    code, out, _ = run("mul", "u[2,2]", "k[1,0]")
    assert out.strip() == "s^-1*k[1,0]*u[2,2]"
    code, out, _ = run("mul", "--", "(r+s)*u[1,1]", "-s^-1*u[1,1]")
    assert code == EXIT_OK and "u(2[1,1])" in out


@pytest.mark.parametrize("bad", ["u[1,", "u[2,1]", "u[1,1]+", "w[1,1]", "u[1,1]**u[2,2]", ""])
def test_mul_parse_errors(bad):
    code, _, err = run("mul", bad)
    assert code == EXIT_USAGE
    assert err


def test_mul_rank_too_small():
    assert run("mul", "--rank", "1", "u[2,2]")[0] == EXIT_USAGE


def test_mul_json():
    code, out, _ = run("mul", "--format", "json", "u[1,1]", "u[2,2]")
    data = json.loads(out)
    assert code == EXIT_OK and data["rank"] == 2 and len(data["terms"]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "serre", "--rank", "4"),
        ("verify", "green", "--rank", "3", "--max-dim", "4", "--q", "2,3"),
        ("verify", "hopf", "--rank", "2", "--max-dim", "3"),
        ("verify", "lower", "--rank", "3"),
        ("verify", "pbw", "--rank", "2", "--max-dim", "3"),
        ("verify", "bar", "--rank", "2", "--max-dim", "3"),
        ("verify", "genext", "--rank", "3", "--max-dim", "3"),
    ],
)
def test_verify_passes(argv):
    code, out, _ = run(*argv)
    assert code == EXIT_OK, out
    assert "PASS" in out


def test_verify_json_report():
    code, out, _ = run("verify", "serre", "--rank", "3", "--format", "json")
    report = json.loads(out)
    assert code == EXIT_OK and report["passed"] and report["failures"] == []


def test_basis_canonical():
    code, out, _ = run("basis", "canonical", "--dim", "1,1")
    assert code == EXIT_OK
    assert out.splitlines() == [
        "C([1,1]+[2,2]) = <u([1,1]+[2,2])>",
        "C([1,2]) = <u([1,2])> + s*<u([1,1]+[2,2])>",
    ]


def test_basis_monomial_distinguished():
    code, out, _ = run("basis", "monomial", "--dim", "1,1", "--distinguished")
    assert code == EXIT_OK
    words = {line.split(" = ")[0] for line in out.splitlines()}
    assert words == {"u_(1,2)", "u_(2,1)"}


def test_basis_pbw_simple():
    code, out, _ = run("basis", "pbw", "--dim", "1,0")
    assert code == EXIT_OK and out.startswith("X[1,1]")


def test_poset_formats():
    code, out, _ = run("poset", "--dim", "1,1", "--format", "dot")
    assert code == EXIT_OK and out.startswith("digraph")
    code, out, _ = run("poset", "--dim", "1,1", "--format", "json")
    assert code == EXIT_OK and json.loads(out)
    assert run("mul", "--format", "dot", "u[1,1]")[0] == EXIT_USAGE


def test_budget_exceeded():
    code, _, err = run("basis", "canonical", "--dim", "2,2", "--budget", "3")
    assert code == EXIT_BUDGET and "budget" in err


def test_budget_hard_limit_is_usage_error():
    assert run("mul", "--budget", "11", "u[1,1]")[0] == EXIT_USAGE


def test_unknown_command():
    assert run("frobnicate")[0] == EXIT_USAGE
    assert run("verify", "nonsense")[0] == EXIT_USAGE


def test_cache_does_not_change_output(tmp_path):
    cache = tmp_path / "hall.json"
    plain = run("basis", "canonical", "--dim", "2,1")
    first = run("basis", "canonical", "--dim", "2,1", "--cache", str(cache))
    second = run("basis", "canonical", "--dim", "2,1", "--cache", str(cache))
    assert cache.exists()
    assert plain == first == second


def test_output_is_deterministic():
    argv = ("mul", "--format", "json", "u[1,1]", "u[1,2]", "u[2,2]")
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rshall", "mul", "--rank", "2", "u[2,2]", "u[1,1]"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "u([1,1]+[2,2])"


def test_exit_fail_constant():
    assert EXIT_FAIL == 1
