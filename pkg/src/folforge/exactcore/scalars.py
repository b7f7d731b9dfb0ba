"""Exact scalars: ``Fraction`` for Q and :class:`GaussianRational` for Q(i).

Values that happen to be real are always returned as ``Fraction``, so each
number has exactly one representation.
"""
from __future__ import annotations

import re
from fractions import Fraction


class GaussianRational:
    """a + b*i with rational a, b and b != 0 (real values collapse to Fraction)."""

    __slots__ = ("re", "im")

    def __new__(cls, re, im=0):
        re, im = Fraction(re), Fraction(im)
        if im == 0:
            return re
        self = object.__new__(cls)
        self.re = re
        self.im = im
        return self

    @staticmethod
    def _parts(x):
        if isinstance(x, GaussianRational):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return Fraction(x), Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = p
        return GaussianRational(self.re * a - self.im * b, self.re * b + self.im * a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = p
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return GaussianRational((self.re * a + self.im * b) / n, (self.im * a - self.re * b) / n)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.inverse() * GaussianRational(*p)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        return GaussianRational(self.re / n, -self.im / n)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out, base = Fraction(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return True

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return scalar_str(self)


I = GaussianRational(0, 1)


def is_gaussian(x) -> bool:
    return isinstance(x, GaussianRational)


def scalar_str(x) -> str:
    """Canonical ASCII text: ``a/b`` (``a`` when integral) or ``a/b+c/d*i``."""
    if isinstance(x, GaussianRational):
        sign = "-" if x.im < 0 else "+"
        return f"{x.re}{sign}{abs(x.im)}*i"
    return str(Fraction(x))


_SCALAR_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)(?:([+-])(\d+(?:/\d+)?)\*i)?$")


def parse_scalar(text: str):
    """Inverse of :func:`scalar_str`."""
    m = _SCALAR_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a canonical scalar: {text!r}")
    re_part = Fraction(m.group(1))
    if m.group(2) is None:
        return re_part
    im = Fraction(m.group(3))
    return GaussianRational(re_part, -im if m.group(2) == "-" else im)


def bit_size(x) -> int:
    """Numerator bit-length, used for pivot selection."""
    if isinstance(x, GaussianRational):
        return max(x.re.numerator.bit_length(), x.im.numerator.bit_length())
    return abs(Fraction(x).numerator).bit_length()
