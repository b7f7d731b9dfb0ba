"""Multivariate gcd, squarefree part and Sylvester resultants.

The gcd recurses on content and primitive part with respect to the chosen
main variable (the common variable of least total degree); the univariate
step is the subresultant pseudo-remainder sequence over the coefficient ring.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import ZeroPolynomial
from .poly import MultiPoly


def _one(n: int) -> MultiPoly:
    return MultiPoly.const(1, n)


# dense univariate helpers over the coefficient field (lists, index = degree)

def _ustrip(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _umod(a: list, b: list) -> list:
    a = list(a)
    db = len(b) - 1
    inv = 1 / b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1] * inv
        shift = len(a) - 1 - db
        for j in range(db + 1):
            a[shift + j] = a[shift + j] - c * b[j]
        a.pop()
        _ustrip(a)
    return a


def _ugcd_degree(a: list, b: list) -> int:
    a, b = _ustrip(list(a)), _ustrip(list(b))
    while b:
        a, b = b, _umod(a, b)
    return len(a) - 1


def _restrict_to_line(p: MultiPoly, base: Sequence[int], direc: Sequence[int]) -> list:
    """Dense coefficients in t of p(base + t*direc)."""
    out: list = []
    for e, c in p.terms.items():
        term = [c]
        for b, d, k in zip(base, direc, e):
            for _ in range(k):
                nxt = [Fraction(0)] * (len(term) + 1)
                for i, x in enumerate(term):
                    nxt[i] = nxt[i] + x * b
                    nxt[i + 1] = nxt[i + 1] + x * d
                term = nxt
        if len(term) > len(out):
            out.extend([Fraction(0)] * (len(term) - len(out)))
        for i, x in enumerate(term):
            out[i] = out[i] + x
    return _ustrip(out)


def _coprime_on_line(a: MultiPoly, b: MultiPoly) -> bool:
    """Sound shortcut: True only if gcd(a, b) is certainly constant.

    If the top-degree form of ``a`` does not vanish at the direction, every
    divisor of ``a`` keeps its degree on the line, so a constant gcd of the
    restrictions forces a constant gcd."""
    n = a.nvars
    base = [(3 * i + 1) % 11 - 5 for i in range(n)]
    direc = [(i * i + 2 * i + 3) % 13 - 6 or 1 for i in range(n)]
    top = a.homogeneous_part(a.degree())
    if top.evaluate(direc) == 0:
        return False
    ra = _restrict_to_line(a, base, direc)
    rb = _restrict_to_line(b, base, direc)
    if len(ra) - 1 != a.degree() or not rb:
        return False
    return _ugcd_degree(ra, rb) == 0


def _pick_variable(a: MultiPoly, b: MultiPoly, common: set) -> int:
    return min(common, key=lambda i: (a.degree_in(i) + b.degree_in(i), i))


def _content(p: MultiPoly, v: int) -> MultiPoly:
    coeffs = sorted(p.coeffs_in(v).items(), key=lambda kv: (len(kv[1].terms), kv[0]))
    g = coeffs[0][1]
    for _, c in coeffs[1:]:
        if g.is_constant():
            break
        g = _gcd(g, c)
    if g.is_constant():
        return _one(p.nvars)
    return g


def _prem(a: list, b: list, n: int) -> list:
    """Pseudo-remainder of coefficient lists (index = degree in v)."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[db]
    r = list(a)
    steps = da - db + 1
    for k in range(da, db - 1, -1):
        c = r[k]
        r = [x * lb for x in r]
        if c:
            for j in range(db + 1):
                r[k - db + j] = r[k - db + j] - c * b[j]
        steps -= 1
        r.pop()
    while r and r[-1].is_zero():
        r.pop()
    return r


def _as_list(p: MultiPoly, v: int) -> list:
    cs = p.coeffs_in(v)
    d = max(cs)
    z = MultiPoly.zero(p.nvars)
    return [cs.get(k, z) for k in range(d + 1)]


def _from_list(cs: list, v: int, n: int) -> MultiPoly:
    return MultiPoly.from_coeffs_in(v, {k: c for k, c in enumerate(cs) if not c.is_zero()}, n)


def _primitive(p: MultiPoly, v: int) -> MultiPoly:
    c = _content(p, v)
    return p if c.is_constant() else p.exact_div(c)


def _subresultant_gcd(a: MultiPoly, b: MultiPoly, v: int) -> MultiPoly:
    n = a.nvars
    A, B = _as_list(a, v), _as_list(b, v)
    if len(A) < len(B):
        A, B = B, A
    g = h = _one(n)
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B, n)
        if not R:
            return _primitive(_from_list(B, v, n), v)
        if len(R) == 1:
            return _one(n)
        A = B
        div = g * h ** delta
        B = [c.exact_div(div) for c in R]
        g = A[-1]
        if delta:
            h = (g ** delta).exact_div(h ** (delta - 1))


def _gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    n = a.nvars
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.is_constant() or b.is_constant():
        return _one(n)
    if len(a.terms) == 1 and len(b.terms) == 1:
        (ea,), (eb,) = a.terms, b.terms
        return MultiPoly.monomial(tuple(min(x, y) for x, y in zip(ea, eb)))
    common = a.variables() & b.variables()
    if not common:
        return _one(n)
    if _coprime_on_line(a, b) or _coprime_on_line(b, a):
        return _one(n)
    v = _pick_variable(a, b, common)
    ca, cb = _content(a, v), _content(b, v)
    pa = a if ca.is_constant() else a.exact_div(ca)
    pb = b if cb.is_constant() else b.exact_div(cb)
    c = _gcd(ca, cb)
    return c * _subresultant_gcd(pa, pb, v)


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Greatest common divisor, graded-lex leading coefficient 1."""
    if a.nvars != b.nvars:
        raise ValueError("different variable universes")
    if a.is_zero() and b.is_zero():
        return a
    return _gcd(a, b).monic()


def poly_gcd_many(polys: Sequence[MultiPoly]) -> MultiPoly:
    polys = sorted((p for p in polys if not p.is_zero()), key=lambda p: (p.degree(), len(p.terms)))
    if not polys:
        raise ZeroPolynomial("gcd of nothing nonzero")
    g = polys[0]
    for p in polys[1:]:
        if g.is_constant():
            break
        g = _gcd(g, p)
    return g.monic()


def squarefree_part(p: MultiPoly) -> MultiPoly:
    """Product of the distinct irreducible factors of p (normalized)."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of zero")
    if p.is_constant():
        return _one(p.nvars)
    parts = [p] + [p.diff(i) for i in sorted(p.variables())]
    g = poly_gcd_many(parts)
    return p.exact_div(g).monic()


# resultants

def _bareiss_det(M: list[list[MultiPoly]], n: int) -> MultiPoly:
    size = len(M)
    if size == 0:
        return _one(n)
    M = [list(r) for r in M]
    sign = 1
    prev = _one(n)
    for k in range(size - 1):
        if M[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not M[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly.zero(n)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        piv = M[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                M[i][j] = (piv * M[i][j] - M[i][k] * M[k][j]).exact_div(prev)
        prev = piv
    d = M[size - 1][size - 1]
    return d if sign == 1 else -d


def sylvester_matrix(u: MultiPoly, v: MultiPoly, var: int) -> list[list[MultiPoly]]:
    n = u.nvars
    U, V = _as_list(u, var), _as_list(v, var)
    du, dv = len(U) - 1, len(V) - 1
    z = MultiPoly.zero(n)
    size = du + dv
    rows = []
    for i in range(dv):
        row = [z] * size
        for j, c in enumerate(reversed(U)):
            row[i + j] = c
        rows.append(row)
    for i in range(du):
        row = [z] * size
        for j, c in enumerate(reversed(V)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant_univ(u: MultiPoly, v: MultiPoly, var: int) -> MultiPoly:
    """Sylvester resultant eliminating variable ``var``; the other variables
    are parameters.  Rows of u come first (det of the classical layout)."""
    if u.is_zero() or v.is_zero():
        raise ZeroPolynomial("resultant of a zero polynomial")
    if u.degree_in(var) == 0 and v.degree_in(var) == 0:
        return _one(u.nvars)
    return _bareiss_det(sylvester_matrix(u, v, var), u.nvars)


def discriminant_univ(u: MultiPoly, var: int) -> MultiPoly:
    """res(u, du/dvar) with no division by the leading coefficient and no
    sign factor, so disc(t^2 + b t + c) = 4c - b^2."""
    if u.is_zero():
        raise ZeroPolynomial("discriminant of zero")
    du = u.diff(var)
    if du.is_zero():
        return _one(u.nvars)
    return resultant_univ(u, du, var)
