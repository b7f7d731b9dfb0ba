import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from folforge.errors import DegenerateBasepoint
from folforge.exactcore.linalg import rank
from folforge.extalg import PolyField, check_integrable, contract
from folforge.foliation import singular_divisorial_part, tangent_form_solve
from folforge.moduli import (
    ComponentFamily,
    ambient,
    catalog_entry,
    certified_dimension,
    exc2_form,
    fiber_directions,
    form_space,
    orbit_dimension,
    parametrization_bound,
    phi_differential,
    rat11_dimension,
    sample_image_form,
    sl_basis,
    table1_catalog,
)
from folforge.quadvariety import sym_power_fields

seeds = st.integers(0, 10**6)


def fam(kind, degs, amb="P3"):
    return ComponentFamily(kind, degs, ambient(amb))


def test_form_space_dimensions():
    assert form_space("P3", 4).dimension == 45
    assert form_space("P3", 2).dimension == 6
    fs = form_space("Q3", 3)
    assert (fs.dimension, fs.quotient_dimension) == (40, 35)


def test_phi_differential_ranks():
    M = phi_differential(fam("Rat", (1, 1)), [1, 0, 0, 0, 0, 1, 0, 0])
    assert rank(M.rows, M.ncols) == 5
    M = phi_differential(fam("Rat", (1, 3)))
    assert rank(M.rows, M.ncols) == 22
    M = phi_differential(fam("PBL", (2,)))
    assert rank(M.rows, M.ncols) == 18


@pytest.mark.parametrize("kind,degs,value", [("Rat", (1, 3), 21), ("Rat", (2, 2), 16), ("Log", (1, 1, 1, 1), 14)])
def test_certified_dimensions(kind, degs, value):
    rep = certified_dimension(fam(kind, degs), 3)
    assert rep.certified and rep.upper == value and not rep.discrepancy_flag


def test_orbit_dimensions():
    assert orbit_dimension(exc2_form(), "sl") == 13
    E, H, F = sym_power_fields(3)
    (w,) = tangent_form_solve([E, H], 3)
    assert orbit_dimension(w, [E, H]) == 0


def test_orbit_dimension_basis_independent():
    rng = random.Random(5)
    basis = sl_basis(4)
    mixed = []
    for _ in range(len(basis)):
        v = basis[0] * 0
        for b in basis:
            v = v + b * rng.randint(-2, 2)
        mixed.append(v)
    assert orbit_dimension(exc2_form(), mixed) == 13


def test_rat11():
    assert [rat11_dimension(h) for h in range(3, 8)] == [2, 4, 6, 8, 10]


def test_catalog_entries():
    ids = [e.id for e in table1_catalog()]
    assert len(ids) == len(set(ids))
    e = catalog_entry("P3/Rat(1,3)")
    assert e.expected == 21 and e.buildable
    assert catalog_entry("Q3/Aff").expected == 8
    mu = catalog_entry("MukaiUmemura/Aff")
    assert mu.expected == 1 and not mu.buildable
    assert mu.run()["status"] == "not-buildable"


def test_parametrization_bounds_flag_rows():
    assert parametrization_bound(fam("Log", (1, 1, 2))) == 16
    assert parametrization_bound(fam("Rat", (1, 2), "Q3")) == 16
    assert parametrization_bound(fam("Log", (1, 1, 1), "Q3")) == 13
    assert parametrization_bound(fam("Rat", (1, 3))) == 21


@settings(max_examples=8)
@given(seeds, st.sampled_from([("Rat", (1, 2)), ("Rat", (2, 2)), ("Log", (1, 1, 1)), ("Rat", (1, 1))]))
def test_lower_not_above_upper(seed, spec):
    rep = certified_dimension(fam(*spec), 1, seed)
    assert rep.lower <= rep.upper
    if rep.certified:
        assert rep.lower == rep.upper


@settings(max_examples=8)
@given(seeds, st.sampled_from([("Rat", (1, 3)), ("Log", (1, 1, 1, 1)), ("Rat", (1, 2))]))
def test_image_points_are_foliations(seed, spec):
    w = sample_image_form(fam(*spec), seed)
    assert contract(PolyField.radial(4), w).is_zero()
    assert check_integrable(w).integrable
    assert singular_divisorial_part(w).is_constant()


@settings(max_examples=8)
@given(seeds, st.sampled_from([(1, 2), (1, 3), (2, 2), (1, 1)]))
def test_fiber_directions_in_kernel(seed, degs):
    F = fam("Rat", degs)
    rng = random.Random(seed)
    N = 4
    point = [Fraction(rng.randint(-4, 4)) for _ in range(sum(comb(N - 1 + d, d) for d in degs))]
    try:
        M = phi_differential(F, point)
    except DegenerateBasepoint:
        return
    fib, _ = fiber_directions(F, point)
    expected = 2 if degs[0] == degs[1] else 1
    assert len(fib) == expected
    for d in fib:
        assert all(sum(a * b for a, b in zip(row, d)) == 0 for row in M.rows)
