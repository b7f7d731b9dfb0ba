"""Sparse multivariate polynomials with exact coefficients.

A :class:`MultiPoly` stores a dict ``{exponent tuple: coefficient}`` with no
zero coefficients.  Monomial order for "leading" anything is graded
lexicographic with ``x0 > x1 > ...``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .scalars import GaussianRational, scalar_str


def _coerce(c):
    if isinstance(c, (Fraction, GaussianRational)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, complex):
        return GaussianRational(Fraction(c.real), Fraction(c.imag))
    raise TypeError(f"unsupported coefficient {c!r}")


def grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


def _add_exp(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


class MultiPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    if len(e) != nvars:
                        raise ValueError("exponent length does not match variable count")
                    clean[tuple(e)] = _coerce(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        # trusted constructor: terms already clean
        self = object.__new__(cls)
        self.nvars = nvars
        self.terms = terms
        self._hash = None
        return self

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c, nvars: int) -> "MultiPoly":
        c = _coerce(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c != 0 else {})

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): c})

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def degree_on(self, idx: Iterable[int]) -> int:
        idx = list(idx)
        return max((sum(e[i] for i in idx) for e in self.terms), default=-1)

    def is_homogeneous(self, idx: Iterable[int] | None = None) -> bool:
        idx = range(self.nvars) if idx is None else list(idx)
        degs = {sum(e[i] for i in idx) for e in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def variables(self) -> set:
        out = set()
        for e in self.terms:
            out.update(i for i, k in enumerate(e) if k)
        return out

    def leading(self) -> tuple:
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def lc(self):
        return self.leading()[1] if self.terms else Fraction(0)

    def is_gaussian(self) -> bool:
        return any(isinstance(c, GaussianRational) for c in self.terms.values())

    # arithmetic
    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different variable universes")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.const(other, self.nvars)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v == 0:
                    del out[e]
                else:
                    out[e] = v
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        c = _coerce(c)
        if c == 0:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = MultiPoly.const(1, self.nvars), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, c):
        if isinstance(c, MultiPoly):
            q = self.exact_div(c)
            if q is None:
                raise ArithmeticError("polynomial division is not exact")
            return q
        return self.scale(1 / _coerce(c))

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == MultiPoly.const(other, self.nvars)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # calculus and substitution
    def diff(self, i: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                f = list(e)
                f[i] = k - 1
                out[tuple(f)] = c * k
        return MultiPoly._raw(self.nvars, out)

    def subs(self, values: Sequence["MultiPoly"]) -> "MultiPoly":
        """Compose: replace variable j by ``values[j]`` (all in one universe)."""
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        target = values[0].nvars if values else 0
        powers: list[dict] = [dict() for _ in values]
        one = MultiPoly.const(1, target)

        def pw(j, k):
            cache = powers[j]
            if k not in cache:
                cache[k] = one if k == 0 else pw(j, k - 1) * values[j]
            return cache[k]

        out: dict = {}
        for e, c in self.terms.items():
            term = one
            for j, k in enumerate(e):
                if k:
                    term = term * pw(j, k)
            for f, v in term.terms.items():
                w = out.get(f)
                out[f] = v * c if w is None else w + v * c
        return MultiPoly._raw(target, {e: c for e, c in out.items() if c != 0})

    def evaluate(self, point: Sequence) -> object:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            total = total + v
        return total

    def partial_eval(self, assignment: Mapping[int, object]) -> "MultiPoly":
        """Substitute scalars for some variables, keeping the universe size."""
        out: dict = {}
        for e, c in self.terms.items():
            f = list(e)
            v = c
            for i, x in assignment.items():
                if f[i]:
                    v = v * _coerce(x) ** f[i]
                    f[i] = 0
            f = tuple(f)
            w = out.get(f)
            out[f] = v if w is None else w + v
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c != 0})

    def homogeneous_part(self, deg: int, idx: Iterable[int] | None = None) -> "MultiPoly":
        idx = range(self.nvars) if idx is None else list(idx)
        return MultiPoly._raw(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e[i] for i in idx) == deg}
        )

    def extend(self, nvars: int, positions: Sequence[int] | None = None) -> "MultiPoly":
        """Embed into a larger universe; variable j goes to ``positions[j]``."""
        positions = list(range(self.nvars)) if positions is None else list(positions)
        out = {}
        for e, c in self.terms.items():
            f = [0] * nvars
            for j, k in enumerate(e):
                f[positions[j]] += k
            out[tuple(f)] = c
        return MultiPoly._raw(nvars, out)

    # division
    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        return self.scale(1 / self.lc())

    def exact_div(self, other: "MultiPoly") -> "MultiPoly | None":
        """Quotient if ``other`` divides ``self`` exactly, else ``None``."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return self
        le, lc = other.leading()
        rem = dict(self.terms)
        quot: dict = {}
        others = [(e, c) for e, c in other.terms.items() if e != le]
        while rem:
            e = max(rem, key=grlex_key)
            shift = tuple(a - b for a, b in zip(e, le))
            if min(shift) < 0:
                return None
            q = rem.pop(e) / lc
            quot[shift] = q
            for f, c in others:
                g = _add_exp(f, shift)
                v = rem.get(g, 0) - q * c
                if v == 0:
                    rem.pop(g, None)
                else:
                    rem[g] = v
        return MultiPoly._raw(self.nvars, quot)

    def divides(self, other: "MultiPoly") -> bool:
        return other.exact_div(self) is not None

    # univariate views
    def coeffs_in(self, i: int) -> dict:
        """``{k: coefficient of x_i^k}`` with x_i removed from the coefficients."""
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            f = e[:i] + (0,) + e[i + 1 :]
            out.setdefault(k, {})[f] = c
        return {k: MultiPoly._raw(self.nvars, t) for k, t in out.items()}

    @classmethod
    def from_coeffs_in(cls, i: int, coeffs: Mapping[int, "MultiPoly"], nvars: int) -> "MultiPoly":
        out: dict = {}
        for k, p in coeffs.items():
            for e, c in p.terms.items():
                f = e[:i] + (e[i] + k,) + e[i + 1 :]
                v = out.get(f)
                out[f] = c if v is None else v + c
        return cls._raw(nvars, {e: c for e, c in out.items() if c != 0})

    # text
    def to_str(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            parts.append(_term_str(self.terms[e], e, names))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"MultiPoly({self.to_str()})"

    __str__ = to_str


def _term_str(c, e, names, extra: str = "") -> str:
    factors = []
    for name, k in zip(names, e):
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append(f"{name}^{k}")
    if extra:
        factors.append(extra)
    mono = "*".join(factors)
    if isinstance(c, GaussianRational):
        cs = f"({scalar_str(c)})"
        return f"{cs}*{mono}" if mono else cs
    if not mono:
        return scalar_str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{scalar_str(c)}*{mono}"


def monomials(nvars: int, degree: int, idx: Sequence[int] | None = None) -> list[tuple]:
    """All exponent tuples of the given total degree in the chosen variables,
    sorted in decreasing graded-lex order."""
    idx = list(range(nvars)) if idx is None else list(idx)
    out = []
    for combo in combinations_with_replacement(idx, degree):
        e = [0] * nvars
        for j in combo:
            e[j] += 1
        out.append(tuple(e))
    out.sort(key=grlex_key, reverse=True)
    return out


def variables(nvars: int) -> list[MultiPoly]:
    return [MultiPoly.var(i, nvars) for i in range(nvars)]


def linear_form(coeffs: Sequence, nvars: int | None = None) -> MultiPoly:
    nvars = len(coeffs) if nvars is None else nvars
    out = {}
    for i, c in enumerate(coeffs):
        e = [0] * nvars
        e[i] = 1
        out[tuple(e)] = c
    return MultiPoly(nvars, out)


def from_vector(vec: Sequence, basis: Sequence[tuple], nvars: int) -> MultiPoly:
    return MultiPoly(nvars, {e: c for e, c in zip(basis, vec)})


def to_vector(p: MultiPoly, basis: Sequence[tuple]) -> list:
    return [p.terms.get(e, Fraction(0)) for e in basis]
