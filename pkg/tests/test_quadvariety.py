import random
from fractions import Fraction
from functools import lru_cache

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from folforge.errors import KernelDimensionUnexpected
from folforge.exactcore.poly import MultiPoly, variables
from folforge.extalg import PolyForm, ext_d
from folforge.foliation import make_log_family
from folforge.quadvariety import (
    EQUIANHARMONIC,
    HARMONIC,
    NAMED_EXAMPLES,
    QSTAR,
    CurveParam,
    QuadricContext,
    RationalMapData,
    affQ_build,
    curve_in_singular_scheme,
    invariant_hypersurface,
    pullback_form,
    reduce_mod_quadric,
    restricted_equal,
    singular_curves,
    sym_power_fields,
    sym_power_matrices,
    verify_named_example,
)
from folforge.sampling import rand_int, rand_poly

from oracles import sym_vars, to_sympy

x = variables(5)
seeds = st.integers(0, 10**6)


@lru_cache(maxsize=1)
def _cached_affq():
    return affQ_build()


@pytest.fixture(scope="module")
def affq():
    return _cached_affq()


def test_reduce_examples():
    ctx = QuadricContext(QSTAR, (0, 0, 0, 1, 1))
    assert reduce_mod_quadric(QSTAR, ctx).is_zero()
    assert reduce_mod_quadric(x[3] * x[4], ctx) == -(x[0] ** 2) - x[1] * x[2]


def test_reduce_agrees_with_sympy_remainder():
    ctx = QuadricContext(QSTAR, (0, 0, 0, 1, 1))
    p = rand_poly(random.Random(1), 5, 3)
    xs = sym_vars(5)
    r = to_sympy(reduce_mod_quadric(p, ctx), xs)
    # difference is a multiple of q, and r has no x3*x4 monomial
    quo, rem = sp.div(to_sympy(p, xs) - r, to_sympy(QSTAR, xs), *xs)
    assert rem == 0
    assert all(not (m[3] and m[4]) for m in sp.Poly(r, *xs).monoms())


def test_restricted_equality_examples(affq):
    ctx, w = affq.ctx, affq.omega
    q = ctx.q
    dq = ext_d(PolyForm.function(q))
    dx0 = PolyForm.dx(0, 5)
    rel = dq * x[0] - dx0 * (q * 2)
    assert restricted_equal(w, w + rel, ctx)
    assert not restricted_equal(w, w + dq * x[0], ctx)


def test_two_affq_constructions_agree(affq):
    assert affq.checks["contraction_matches"]


def test_pullback_examples():
    data = RationalMapData(5, ((x[0], x[1]),))
    u0, u1 = variables(2)
    w = pullback_form(data, [(1, u0), (-1, u1)])
    assert w.to_str() == "x1*dx0 - x0*dx1"


def test_sym_power_n1():
    E, H, F = sym_power_matrices(1)
    assert E.rows == [[0, 1], [0, 0]] and H.rows == [[1, 0], [0, -1]] and F.rows == [[0, 0], [1, 0]]


def test_invariant_hypersurface_examples():
    E, H, F = sym_power_fields(4)
    Q = invariant_hypersurface(EQUIANHARMONIC, [E, F, H], 2)
    assert Q is not None and QuadricContext(Q).matrix is not None
    assert Q == MultiPoly(5, {(1, 0, 0, 0, 1): 1, (0, 1, 0, 1, 0): Fraction(-1, 4), (0, 0, 2, 0, 0): Fraction(1, 12)})
    # the harmonic orbit lies on no quadric but on a unique cubic
    assert invariant_hypersurface(HARMONIC, [E, F, H], 2) is None
    C = invariant_hypersurface(HARMONIC, [E, F, H], 3)
    assert C is not None and C.degree() == 3
    E2, H2, F2 = sym_power_fields(2)
    a0, a1, a2 = variables(3)
    disc = invariant_hypersurface([1, 0, 0], [E2, F2, H2], 2)
    assert disc == (a1 * a1 - a0 * a2 * 4).monic()
    assert invariant_hypersurface([0, 1, 0], [E2, F2, H2], 2) is None


def test_invariant_hypersurface_kernel_too_big():
    E, H, F = sym_power_fields(4)
    with pytest.raises(KernelDimensionUnexpected):
        invariant_hypersurface([1, 0, 0, 0, 0], [E, H], 2)


def test_affq_bundle(affq):
    c = affq.checks
    assert affq.integrable and c["gcd_one"] and c["radial"] and c["annihilated"]
    assert c["quadric_rank"] == 5 and c["fields_orthogonal"]
    assert affq.invariant_hyperplane_count == 1
    assert affq.orbit_dim == 8
    assert all(c["singular_curves"].values())


def test_random_quartic_curve_not_singular(affq):
    rng = random.Random(3)
    comps = tuple(rand_poly(rng, 2, 4) for _ in range(5))
    assert not curve_in_singular_scheme(affq.omega, CurveParam(comps), affq.ctx)


@pytest.mark.parametrize("id_", [i for i in NAMED_EXAMPLES if i != "affQ"])
def test_named_examples(id_):
    rep = verify_named_example(id_)
    assert rep.passed, rep.checks


@given(seeds)
def test_reduce_is_ring_map(seed):
    rng = random.Random(seed)
    ctx = QuadricContext(QSTAR)
    a, b = rand_poly(rng, 5, 2, bound=3), rand_poly(rng, 5, 1, bound=3)
    r = ctx.reduce
    assert r(a * b) == r(r(a) * r(b))
    assert r(r(a)) == r(a)


def test_fields_orthogonal_for_found_quadric(affq):
    Qm = affq.ctx.matrix
    for M in sym_power_matrices(4):
        assert (M.transpose() @ Qm + Qm @ M).is_zero()


@given(seeds)
def test_pullback_commutes_with_d(seed):
    # generic linear map P^4 -> P^2 and a logarithmic form on P^2
    rng = random.Random(seed)
    comps = tuple(rand_poly(rng, 5, 1, bound=3) for _ in range(3))
    data = RationalMapData(5, (comps,))
    u = variables(3)
    a, b = rand_int(rng, 3, True), rand_int(rng, 3, True)
    polars = [u[0], u[1], u[0] + u[1] + u[2]]
    eta = [(a, polars[0]), (b, polars[1]), (-(a + b), polars[2])]
    got = pullback_form(data, eta)
    target = make_log_family([r for r, _ in eta], [p for _, p in eta])
    assert got == target.pullback(list(comps), 5)
    assert ext_d(got) == ext_d(target).pullback(list(comps), 5)


@given(seeds)
def test_curve_check_invariant_under_reparametrization(seed):
    b = _cached_affq()
    rng = random.Random(seed)
    while True:
        M = [[rand_int(rng, 3) for _ in range(2)] for _ in range(2)]
        if M[0][0] * M[1][1] - M[0][1] * M[1][0]:
            break
    lam, mu = variables(2)
    sub = [lam * M[0][0] + mu * M[0][1], lam * M[1][0] + mu * M[1][1]]
    for c in singular_curves().values():
        moved = CurveParam(tuple(p.subs(sub) for p in c.comps))
        assert curve_in_singular_scheme(b.omega, moved, b.ctx) == curve_in_singular_scheme(b.omega, c, b.ctx)
