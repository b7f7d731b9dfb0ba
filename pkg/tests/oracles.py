"""sympy-side oracles: independent expansion of package objects."""
from fractions import Fraction

import sympy as sp

from folforge.exactcore.poly import MultiPoly
from folforge.exactcore.scalars import GaussianRational


def sym_vars(n):
    return sp.symbols(f"x0:{n}")


def to_sympy(p: MultiPoly, xs=None):
    """Independent expansion of a MultiPoly as a sympy expression."""
    xs = xs or sym_vars(p.nvars)
    out = sp.Integer(0)
    for e, c in p.terms.items():
        if isinstance(c, GaussianRational):
            coef = sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator)
        else:
            c = Fraction(c)
            coef = sp.Rational(c.numerator, c.denominator)
        out += coef * sp.prod([x**k for x, k in zip(xs, e)])
    return sp.expand(out)


def from_sympy(expr, n, xs=None):
    xs = xs or sym_vars(n)
    poly = sp.Poly(sp.expand(expr), *xs)
    terms = {}
    for mon, c in poly.terms():
        re, im = sp.re(c), sp.im(c)
        terms[tuple(mon)] = GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))
    return MultiPoly(n, terms)
