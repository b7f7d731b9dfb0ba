"""Pencils (f^p : g^q): multiple fibers, absolute factor counts, Halphen triples."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as igcd
from typing import Sequence

import numpy as np

from . import sampling
from .errors import (
    DegenerateLine,
    EntryOutOfRange,
    InvariantViolation,
    PlaneDisagreement,
    RelationViolated,
    ZeroPolynomial,
)
from .exactcore.gcd import discriminant_univ, poly_gcd, squarefree_part
from .exactcore.linalg import rank
from .exactcore.poly import MultiPoly
from .exactcore.scalars import scalar_str
from .extalg import PolyForm, ext_d
from .foliation import proportional


@dataclass(frozen=True)
class Pencil:
    f: MultiPoly
    g: MultiPoly
    p: int
    q: int

    def __post_init__(self):
        f, g, p, q = self.f, self.g, self.p, self.q
        if p < 1 or q < 1 or igcd(p, q) != 1:
            raise InvariantViolation("exponents must be coprime positive integers")
        if f.nvars != g.nvars:
            raise InvariantViolation("f and g live in different rings")
        if f.is_zero() or g.is_zero() or not f.is_homogeneous() or not g.is_homogeneous():
            raise InvariantViolation("f and g must be nonzero and homogeneous")
        if p * f.degree() != q * g.degree():
            raise InvariantViolation("p deg f must equal q deg g")
        if not poly_gcd(f, g).is_constant():
            raise InvariantViolation("f and g share a factor")

    @property
    def degree(self) -> int:
        return self.p * self.f.degree()

    def member(self, alpha, beta) -> MultiPoly:
        return self.f ** self.p * alpha - self.g ** self.q * beta


def pencil_form(P: Pencil) -> PolyForm:
    """p g df - q f dg, the cleared numerator of d(f^p/g^q)."""
    N = P.f.nvars
    df = ext_d(PolyForm.function(P.f, N))
    dg = ext_d(PolyForm.function(P.g, N))
    return df * (P.g * P.p) - dg * (P.f * P.q)


def is_non_reduced(member: MultiPoly) -> bool:
    if member.is_zero():
        raise ZeroPolynomial("zero member")
    if member.is_constant():
        return False
    return squarefree_part(member).degree() != member.degree()


@dataclass
class FiberBounds:
    lower: int
    upper: int
    witnesses: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "witnesses": self.witnesses}


def _binary(p: MultiPoly, a: int, b: int) -> MultiPoly:
    """Move variables a, b of p into a fresh 2-variable ring (others must be absent)."""
    vals = [MultiPoly.zero(2)] * p.nvars
    vals[a], vals[b] = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    return p.subs(vals)


def _line_discriminant(P: Pencil, base: list, direc: list) -> MultiPoly:
    # ring (t, alpha, beta)
    t, al, be = (MultiPoly.var(i, 3) for i in range(3))
    pts = [t * d + b for b, d in zip(base, direc)]
    fl, gl = P.f.subs(pts), P.g.subs(pts)
    u = fl ** P.p * al - gl ** P.q * be
    if u.degree_in(0) < P.degree:
        raise DegenerateLine("line meets a member at infinity")
    return _binary(discriminant_univ(u, 0), 1, 2)


def _rational_roots(D: MultiPoly) -> list[Fraction]:
    """Rational r with D(r, 1) = 0; numeric candidates, exact confirmation."""
    deg = D.degree()
    coeffs = [D.terms.get((deg - k, k), 0) for k in range(deg + 1)]
    # D(r, 1) = Σ c_k r^{deg-k}; strip a vanishing leading part
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return []
    scale = max(abs(float(c)) for c in coeffs)
    roots = np.roots([float(c) / scale for c in coeffs])
    out: set = set()
    for z in roots:
        if abs(z.imag) > 1e-6 * max(1.0, abs(z)):
            continue
        for den in (10**3, 10**6, 10**9):
            r = Fraction(float(z.real)).limit_denominator(den)
            if D.evaluate([r, Fraction(1)]) == 0:
                out.add(r)
                break
    return sorted(out)


def multiple_fiber_bounds(P: Pencil, lines: int = 3, seed=0) -> FiberBounds:
    if lines < 2:
        raise ValueError("need at least two lines")
    rng = sampling.make_rng(seed)
    N = P.f.nvars
    G = None
    used, attempts = 0, 0
    while used < lines:
        attempts += 1
        if attempts > sampling.MAX_ATTEMPTS * lines:
            raise DegenerateLine("could not find enough generic lines")
        base = [Fraction(sampling.rand_int(rng, 7)) for _ in range(N)]
        direc = [Fraction(sampling.rand_int(rng, 7)) for _ in range(N)]
        try:
            D = _line_discriminant(P, base, direc)
        except DegenerateLine:
            continue
        if D.is_zero():
            continue
        G = D if G is None else poly_gcd(G, D)
        used += 1
    S = squarefree_part(G) if not G.is_constant() else G
    upper = S.degree() if not S.is_constant() else 0
    witnesses = []
    for ab in ((1, 0), (0, 1)):
        if is_non_reduced(P.member(*ab)):
            witnesses.append(ab)
            if S.evaluate(list(ab)) != 0:
                upper += 1
    if not S.is_constant():
        for r in _rational_roots(S):
            if r != 0 and is_non_reduced(P.member(r, 1)):
                witnesses.append((r, Fraction(1)))
    return FiberBounds(len(witnesses), upper, [f"({scalar_str(a)}:{scalar_str(b)})" for a, b in witnesses])


# absolute irreducibility

def _bivariate_monomials(mx: int, my: int) -> list[tuple]:
    return [(i, j) for i in range(mx + 1) for j in range(my + 1)]


def _ruppert_kernel_dim(h: MultiPoly) -> int:
    """Kernel dimension of h(G_y - H_x) - (G h_y - H h_x) = 0 with
    deg G <= (m-1, n) and deg H <= (m, n-2)."""
    m, n = h.degree_in(0), h.degree_in(1)
    if m == 0 or n == 0:
        return max(m, n) - 1
    gm = _bivariate_monomials(m - 1, n)
    hm = _bivariate_monomials(m, n - 2) if n >= 2 else []
    hx, hy = h.diff(0), h.diff(1)
    cols = []
    for e in gm:
        G = MultiPoly(2, {e: 1})
        cols.append(h * G.diff(1) - G * hy)
    for e in hm:
        H = MultiPoly(2, {e: 1})
        cols.append(H * hx - h * H.diff(0))
    mons = sorted({e for c in cols for e in c.terms})
    rows = [[c.terms.get(e, 0) for c in cols] for e in mons]
    return len(cols) - rank(rows, len(cols))


def _plane_restriction(h: MultiPoly, rng) -> MultiPoly | None:
    """Random plane section, dehomogenized; None if the choice is degenerate."""
    N = h.nvars
    d = h.degree()
    x, y = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    one = MultiPoly.const(1, 2)
    M = sampling.rand_full_rank(rng, 3, N, 9) if N >= 3 else None
    images = [x * M.rows[0][i] + y * M.rows[1][i] + one * M.rows[2][i] for i in range(N)]
    r = h.subs(images)
    if r.degree() != d or r.degree_in(0) != d or r.degree_in(1) != d:
        return None
    r = squarefree_part(r)
    if not poly_gcd(r, r.diff(0)).is_constant():
        return None
    return r


def absolute_factor_count(h: MultiPoly, seed=0) -> int:
    """Number of distinct absolutely irreducible factors of h."""
    if h.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if h.degree() < 1:
        raise ValueError("degree must be at least 1")
    if not h.is_homogeneous():
        # homogenize with a fresh variable
        d = h.degree()
        h = MultiPoly(h.nvars + 1, {e + (d - sum(e),): c for e, c in h.terms.items()})
    live = sorted(h.variables())
    if len(live) < h.nvars:
        vals = [MultiPoly.zero(len(live))] * h.nvars
        for k, i in enumerate(live):
            vals[i] = MultiPoly.var(k, len(live))
        h = h.subs(vals)
    if h.nvars == 1:
        return 1
    if h.nvars == 2:
        # binary forms split into linear factors
        return squarefree_part(h).degree()
    rng = sampling.make_rng(seed)
    counts: list[int] = []
    for _ in range(sampling.MAX_ATTEMPTS):
        r = _plane_restriction(h, rng)
        if r is None:
            continue
        counts.append(1 + _ruppert_kernel_dim(r))
        if len(counts) >= 2 and counts[-1] == counts[-2]:
            return counts[-1]
    raise PlaneDisagreement(f"plane sections disagree: {counts}")


def r_partial(P: Pencil, members: Sequence[tuple], seed=0) -> int:
    """Lower bound for r(F): Σ (components - 1) over the listed members."""
    total = 0
    for a, b in members:
        m = P.member(a, b)
        total += absolute_factor_count(squarefree_part(m), seed) - 1
    return total


# Halphen triples

_HALPHEN_LIST = [(2, 3, 3), (2, 3, 4), (2, 3, 5)]


@dataclass(frozen=True)
class HalphenTriple:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 2:
            raise EntryOutOfRange("entries must be at least 2")


def halphen_admissible(T: HalphenTriple) -> bool:
    by_sum = Fraction(1, T.p) + Fraction(1, T.q) + Fraction(1, T.r) > 1
    s = tuple(sorted((T.p, T.q, T.r)))
    by_list = s[:2] == (2, 2) or s in _HALPHEN_LIST
    if by_sum != by_list:
        raise AssertionError("inequality and explicit list disagree")
    return by_sum


def halphen_witness_check(F: MultiPoly, G: MultiPoly, H: MultiPoly, T: HalphenTriple, k: int) -> bool:
    p, q, r = T.p, T.q, T.r
    if not (F ** p + G ** q + H ** r).is_zero():
        raise RelationViolated("F^p + G^q + H^r is not zero")
    N = F.nvars
    d = {id(P): ext_d(PolyForm.function(P, N)) for P in (F, G, H)}
    kp, kq, kr = Fraction(k, p), Fraction(k, q), Fraction(k, r)

    def mix(A, a, B, b):
        return d[id(B)] * (A * a) - d[id(A)] * (B * b)

    A = mix(F, kp, G, kq)  # (k/p) F dG - (k/q) G dF
    B = mix(G, kq, H, kr)
    C = mix(H, kr, F, kp)
    checks = [
        (A * F ** (p - 1), B * H ** (r - 1)),
        (B * G ** (q - 1), C * F ** (p - 1)),
        (C * H ** (r - 1), A * G ** (q - 1)),
    ]
    return all(not x.is_zero() and proportional(x, y) for x, y in checks)
