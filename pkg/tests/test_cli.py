import json
from fractions import Fraction
import random
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from folforge.cli import main, parse_expression, parse_form, parse_poly
from folforge.errors import ExpressionSyntaxError, GradingError, UnknownIdentifier
from folforge.exactcore.poly import MultiPoly, monomials, variables
from folforge.exactcore.scalars import GaussianRational
from folforge.extalg import PolyForm, form_from_vector, form_monomial_basis
from folforge.quadvariety import QSTAR

SCENARIOS = sorted((Path(__file__).parent / "scenarios").glob("*.json"))
x = variables(4)


def call(argv, capsys):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_parse_examples():
    w = parse_form("x1*dx0 - x0*dx1")
    assert w.coeffs == {(0,): x[1], (1,): -x[0]}
    with pytest.raises(UnknownIdentifier) as err:
        parse_expression("3*f2*df1")
    assert (err.value.line, err.value.col) == (1, 3)
    assert parse_poly("(x0^2+x1*x2+x3*x4)", "Q3") == QSTAR


def test_parse_errors_carry_position():
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_form("x0 +\n  * dx1")
    assert (err.value.line, err.value.col) == (2, 3)
    with pytest.raises(GradingError):
        parse_form("x0 + dx1")
    with pytest.raises(GradingError):
        parse_form("dx0^2")
    with pytest.raises(ExpressionSyntaxError):
        parse_form("x0 $ x1")
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_form("x1*dx0 + \n ")
    assert (err.value.line, err.value.col) == (2, 2)
    assert parse_form("  x1*dx0 \n") == parse_form("x1*dx0")


def test_lenient_unary_minus_and_gaussians():
    assert parse_form("x0*-dx1") == parse_form("-x0*dx1")
    p = parse_poly("(1/2-3*i)*x0 + i*x1", "P1")
    assert p.terms[(1, 0)] == GaussianRational(Fraction(1, 2), -3)


def test_eps_is_a_parameter():
    w = parse_form("eps*x0*dx1 - x1*dx0")
    assert w.ncoords == 4 and w.nvars == 5
    with pytest.raises(GradingError):
        parse_form("deps")


def _rand_scalar(rng):
    if rng.random() < 0.2:
        return GaussianRational(Fraction(rng.randint(-3, 3), rng.randint(1, 3)), Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


@given(st.integers(0, 10**6), st.integers(0, 3), st.integers(0, 3))
def test_round_trip(seed, q, m):
    rng = random.Random(seed)
    keys = form_monomial_basis(4, q, m)
    w = form_from_vector([_rand_scalar(rng) if rng.random() < 0.4 else 0 for _ in keys], keys, 4, q)
    if w.is_zero():
        return  # "0" carries no form degree
    assert parse_form(w.to_str()) == w


@given(st.integers(0, 10**6))
def test_round_trip_with_parameter(seed):
    rng = random.Random(seed)
    terms = {e + (rng.randint(0, 2),): _rand_scalar(rng) for e in monomials(4, 2)}
    p = MultiPoly(5, terms)
    w = PolyForm(4, 1, {(0,): p, (2,): p * 2}, 5)
    names = ["x0", "x1", "x2", "x3", "eps"]
    assert parse_form(w.to_str(names)) == w


def test_dim_command(capsys):
    code, out = call(["dim", "--family", "Rat", "--degrees", "1,3", "--ambient", "P3"], capsys)
    assert code == 0 and out["certified"] and out["upper"] == 21


def test_example_command(capsys):
    code, out = call(["example", "--id", "affQ"], capsys)
    assert code == 0 and out["passed"] and out["checks"]["orbit_dimension"] == 8


def test_pencil_command(capsys):
    code, out = call(["pencil", "--f", "x0", "--g", "x1", "--p", "1", "--q", "1"], capsys)
    assert code == 0
    assert (out["multiple_lower"], out["multiple_upper"], out["r_partial"]) == (0, 0, 0)


def test_exit_codes(capsys):
    assert call(["dim", "--family", "Nope", "--degrees", "1"], capsys)[0] == 3
    assert call(["check", "--form", "x0*dy0"], capsys)[0] == 3
    assert call(["example", "--id", "unknown"], capsys)[0] == 3
    assert call([], capsys)[0] == 3


def test_scenario_mismatch_exits_two(tmp_path, capsys):
    doc = {"command": "orbit", "options": {"id": "P3/Aff"}, "expected": {"orbit_dimension": 12}}
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(doc))
    code, out = call(["--scenario", str(f)], capsys)
    assert code == 2 and out["mismatches"] == ["orbit_dimension"]


@pytest.mark.parametrize("path", SCENARIOS, ids=[p.stem for p in SCENARIOS])
def test_scenario_corpus(path, capsys):
    code, out = call(["--scenario", str(path)], capsys)
    assert code == 0, out["mismatches"]


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "folforge", "dim", "--family", "Log", "--degrees", "1,1,1,1", "--seed", "4"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and b"." not in a.split(b'"raw_rank"')[0].split(b'"lower"')[1]


def test_catalog_runs_in_one_process(capsys):
    code, out = call(["catalog"], capsys)
    assert code == 0
    status = {r["id"]: r["status"] for r in out["rows"]}
    assert set(status.values()) <= {"match", "flagged", "not-buildable"}
    assert status["P3/Log(1,1,2)"] == "flagged"


def test_catalog_threads_keep_order(monkeypatch, capsys):
    monkeypatch.setenv("FOLFORGE_THREADS", "2")
    code, out = call(["catalog"], capsys)
    ids = [r["id"] for r in out["rows"]]
    monkeypatch.delenv("FOLFORGE_THREADS")
    _, serial = call(["catalog"], capsys)
    assert code == 0 and ids == [r["id"] for r in serial["rows"]]
    assert out == serial
