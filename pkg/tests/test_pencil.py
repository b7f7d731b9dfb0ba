import random
from fractions import Fraction
from itertools import product

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from folforge.errors import InvariantViolation, RelationViolated
from folforge.exactcore.gcd import poly_gcd
from folforge.exactcore.poly import MultiPoly, variables
from folforge.exactcore.scalars import I
from folforge.extalg import PolyField, check_integrable, contract
from folforge.foliation import degree_of
from folforge.pencil import (
    HalphenTriple,
    Pencil,
    _ruppert_kernel_dim,
    absolute_factor_count,
    halphen_admissible,
    halphen_witness_check,
    is_non_reduced,
    multiple_fiber_bounds,
    pencil_form,
    r_partial,
)
from folforge.sampling import rand_poly

from oracles import to_sympy

x = variables(4)
seeds = st.integers(0, 10**6)


def cubic_quadric(seed=0):
    rng = random.Random(seed)
    return Pencil(rand_poly(rng, 4, 3, bound=3), rand_poly(rng, 4, 2, bound=3), 2, 3)


def test_pencil_invariants():
    with pytest.raises(InvariantViolation):
        Pencil(x[0], x[1], 2, 2)
    with pytest.raises(InvariantViolation):
        Pencil(x[0] ** 2, x[1], 1, 1)
    with pytest.raises(InvariantViolation):
        Pencil(x[0] * x[1], x[0] * x[2], 1, 1)


def test_pencil_form_examples():
    w = pencil_form(Pencil(x[0], x[1], 1, 1))
    assert w.to_str() == "x1*dx0 - x0*dx1"
    w = pencil_form(cubic_quadric())
    assert check_integrable(w).integrable
    assert w.coefficient_degree() == 4 and degree_of(w) == 3


def test_non_reduced_examples():
    assert is_non_reduced(x[0] ** 2)
    assert not is_non_reduced(x[0] * x[1])
    f = rand_poly(random.Random(2), 4, 2)
    assert is_non_reduced(f * f)


def test_multiple_fiber_examples():
    b = multiple_fiber_bounds(cubic_quadric())
    assert (b.lower, b.upper) == (2, 2)
    b = multiple_fiber_bounds(Pencil(x[0], x[1], 1, 1))
    assert (b.lower, b.upper, b.witnesses) == (0, 0, [])
    g = rand_poly(random.Random(4), 4, 2, bound=3)
    b = multiple_fiber_bounds(Pencil(x[0], g, 2, 1))
    assert (b.lower, b.upper) == (1, 1)


def test_factor_count_examples():
    assert absolute_factor_count(x[0] * x[1]) == 2
    assert absolute_factor_count(x[0] * x[3] - x[1] * x[2]) == 1
    assert absolute_factor_count(x[0] ** 2 + x[1] ** 2) == 2


def _oracle_count(h: MultiPoly):
    X, Y = sp.symbols("x0 x1")
    facs = sp.factor_list(to_sympy(h, [X, Y]), extension=sp.I)[1]
    return len(facs)


@pytest.mark.parametrize("h", [
    lambda X, Y: (X**2 + Y**2 + 1),
    lambda X, Y: (X - Y) * (X * Y - 1),
    lambda X, Y: (X**2 - Y**3) * (X + 2),
    lambda X, Y: (X**2 + Y**2) * (X - 3 * Y + 1),
])
def test_ruppert_against_factorization(h):
    X, Y = variables(2)
    p = h(X, Y)
    assert 1 + _ruppert_kernel_dim(p) == _oracle_count(p)


def test_r_partial_examples():
    P = Pencil(x[0] * x[1], x[2] * x[3], 1, 1)
    assert r_partial(P, [(1, 0), (0, 1)]) == 4 - 2
    assert r_partial(P, []) == 0
    rng = random.Random(8)
    Q = Pencil(rand_poly(rng, 4, 2, bound=3), rand_poly(rng, 4, 2, bound=3), 1, 1)
    assert r_partial(Q, [(1, 0), (0, 1)]) == 0


def test_halphen_examples():
    assert halphen_admissible(HalphenTriple(2, 3, 5))
    assert not halphen_admissible(HalphenTriple(3, 3, 3))
    assert halphen_admissible(HalphenTriple(2, 2, 99))


def test_halphen_list_exhaustive():
    listed = {(2, 3, 3), (2, 3, 4), (2, 3, 5)}
    for t in product(range(2, 13), repeat=3):
        s = tuple(sorted(t))
        assert halphen_admissible(HalphenTriple(*t)) == (s[:2] == (2, 2) or s in listed)


def test_halphen_witness():
    s, t = variables(2)
    F, G, H = s * s - t * t, s * t * 2, (s * s + t * t) * I
    assert halphen_witness_check(F, G, H, HalphenTriple(2, 2, 2), 2)
    with pytest.raises(RelationViolated):
        halphen_witness_check(F, G + s * t, H, HalphenTriple(2, 2, 2), 2)


@given(seeds)
def test_factor_count_additive(seed):
    rng = random.Random(seed)
    h1 = rand_poly(rng, 3, rng.randint(1, 2), bound=3)
    h2 = rand_poly(rng, 3, rng.randint(1, 2), bound=3)
    if not poly_gcd(h1, h2).is_constant() or h1 == h2:
        return
    assert absolute_factor_count(h1 * h2, seed) == absolute_factor_count(h1, seed) + absolute_factor_count(h2, seed)


@given(seeds)
def test_bounds_ordered_and_at_most_two(seed):
    rng = random.Random(seed)
    f = rand_poly(rng, 4, 1, bound=3)
    g = rand_poly(rng, 4, 2, bound=3)
    if not poly_gcd(f, g).is_constant():
        return
    b = multiple_fiber_bounds(Pencil(f, g, 2, 1), seed=seed)
    assert b.lower <= b.upper <= 2


@given(seeds)
def test_r_partial_monotone(seed):
    P = Pencil(x[0] * x[1], x[2] * x[3], 1, 1)
    rng = random.Random(seed)
    members = [(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(1, 3))) for _ in range(2)]
    small = r_partial(P, members[:1])
    assert r_partial(P, members) >= small


def test_pencil_form_killed_by_common_tangent_fields():
    w = pencil_form(Pencil(x[0], x[1], 1, 1))
    for i in (2, 3):
        assert contract(PolyField.coordinate(i, 4), w).is_zero()
