"""Polynomial differential forms and vector fields on the affine cone.

Conventions, fixed once:

* A q-form is a dict ``{I: coefficient}`` over strictly increasing index
  tuples ``I``; ``e_I = dx_{I[0]} ∧ ... ∧ dx_{I[q-1]}``.
* Wedge signs are Koszul signs of the shuffle that sorts ``I + J``.
* Contraction is the left interior product:
  ``i_v(f e_I) = Σ_k (-1)^k v_{I[k]} f e_{I minus I[k]}``.
* Only the first ``ncoords`` polynomial variables are differentiated and
  moved by the radial field; any further variables are parameters.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import AmbientMismatch, DegreeUnderflow, NotHomogeneous, NotRadiallyAnnihilated, ZeroForm
from .exactcore.poly import MultiPoly, monomials


def _merge(I: tuple, J: tuple):
    """Sign and sorted union of two index tuples, or None if they overlap."""
    if set(I) & set(J):
        return None
    inversions = sum(1 for i in I for j in J if i > j)
    return (-1 if inversions % 2 else 1), tuple(sorted(I + J))


class PolyForm:
    __slots__ = ("ncoords", "nvars", "q", "coeffs")

    def __init__(self, ncoords: int, q: int, coeffs: Mapping[tuple, MultiPoly] | None = None, nvars: int | None = None):
        self.ncoords = ncoords
        self.nvars = ncoords if nvars is None else nvars
        self.q = q
        clean = {}
        for I, c in (coeffs or {}).items():
            I = tuple(I)
            if len(I) != q or list(I) != sorted(set(I)):
                raise ValueError(f"index tuple {I} is not strictly increasing of length {q}")
            if c.nvars != self.nvars:
                raise AmbientMismatch("coefficient lives in a different ring")
            if not c.is_zero():
                clean[I] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, ncoords, q, coeffs, nvars):
        self = object.__new__(cls)
        self.ncoords, self.q, self.nvars = ncoords, q, nvars
        self.coeffs = {I: c for I, c in coeffs.items() if not c.is_zero()}
        return self

    # constructors
    @classmethod
    def zero(cls, ncoords: int, q: int, nvars: int | None = None) -> "PolyForm":
        return cls(ncoords, q, {}, nvars)

    @classmethod
    def function(cls, p: MultiPoly, ncoords: int | None = None) -> "PolyForm":
        ncoords = p.nvars if ncoords is None else ncoords
        return cls(ncoords, 0, {(): p}, p.nvars)

    @classmethod
    def dx(cls, i: int, ncoords: int, nvars: int | None = None) -> "PolyForm":
        nvars = ncoords if nvars is None else nvars
        return cls(ncoords, 1, {(i,): MultiPoly.const(1, nvars)}, nvars)

    @classmethod
    def one_form(cls, comps: Sequence[MultiPoly], ncoords: int | None = None) -> "PolyForm":
        ncoords = len(comps) if ncoords is None else ncoords
        return cls(ncoords, 1, {(i,): c for i, c in enumerate(comps)}, comps[0].nvars)

    @classmethod
    def volume(cls, ncoords: int, nvars: int | None = None, idx: Sequence[int] | None = None) -> "PolyForm":
        nvars = ncoords if nvars is None else nvars
        idx = tuple(range(ncoords)) if idx is None else tuple(sorted(idx))
        return cls(ncoords, len(idx), {idx: MultiPoly.const(1, nvars)}, nvars)

    # queries
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, I: Iterable[int]) -> MultiPoly:
        return self.coeffs.get(tuple(I), MultiPoly.zero(self.nvars))

    def components(self) -> list[MultiPoly]:
        """Coefficients of a 1-form as a dense list."""
        return [self.coefficient((i,)) for i in range(self.ncoords)]

    def coefficient_degree(self) -> int | None:
        """Common degree of coefficients in the coordinates, None if mixed."""
        degs = set()
        coords = range(self.ncoords)
        for c in self.coeffs.values():
            if not c.is_homogeneous(coords):
                return None
            degs.add(c.degree_on(coords))
        if len(degs) > 1:
            return None
        return degs.pop() if degs else None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.coefficient_degree() is not None

    # arithmetic
    def _check(self, other: "PolyForm"):
        if self.ncoords != other.ncoords or self.nvars != other.nvars:
            raise AmbientMismatch("forms live on different ambients")

    def __add__(self, other: "PolyForm") -> "PolyForm":
        self._check(other)
        if self.q != other.q:
            raise ValueError("adding forms of different degree")
        out = dict(self.coeffs)
        for I, c in other.coeffs.items():
            out[I] = out[I] + c if I in out else c
        return PolyForm._raw(self.ncoords, self.q, out, self.nvars)

    def __neg__(self) -> "PolyForm":
        return PolyForm._raw(self.ncoords, self.q, {I: -c for I, c in self.coeffs.items()}, self.nvars)

    def __sub__(self, other: "PolyForm") -> "PolyForm":
        return self + (-other)

    def __mul__(self, c) -> "PolyForm":
        """Multiply by a scalar or a polynomial (0-form)."""
        if isinstance(c, PolyForm):
            return wedge(self, c)
        return PolyForm._raw(self.ncoords, self.q, {I: v * c for I, v in self.coeffs.items()}, self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, PolyForm)
            and self.q == other.q
            and self.ncoords == other.ncoords
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ncoords, self.q, frozenset(self.coeffs.items())))

    def map_coeffs(self, fn, nvars: int | None = None) -> "PolyForm":
        out = {I: fn(c) for I, c in self.coeffs.items()}
        if nvars is None:
            nvars = next(iter(out.values())).nvars if out else self.nvars
        return PolyForm._raw(self.ncoords, self.q, out, nvars)

    def div(self, p: MultiPoly) -> "PolyForm":
        """Exact division of every coefficient."""
        out = {}
        for I, c in self.coeffs.items():
            v = c.exact_div(p)
            if v is None:
                raise ArithmeticError("form is not divisible by the given polynomial")
            out[I] = v
        return PolyForm._raw(self.ncoords, self.q, out, self.nvars)

    def normalized(self) -> "PolyForm":
        """Scale so the first nonzero coefficient (graded-lex over index tuple,
        then monomial) has leading coefficient 1."""
        if not self.coeffs:
            return self
        I = min(self.coeffs)
        return self * (1 / self.coeffs[I].lc())

    def pullback(self, images: Sequence[MultiPoly], ncoords: int | None = None) -> "PolyForm":
        """Substitute ``x_i -> images[i]`` and ``dx_i -> d(images[i])``."""
        if len(images) != self.ncoords:
            raise AmbientMismatch("need one image per coordinate")
        tgt_vars = images[0].nvars
        ncoords = tgt_vars if ncoords is None else ncoords
        subs = list(images)
        if self.nvars > self.ncoords:
            if tgt_vars < ncoords + (self.nvars - self.ncoords):
                raise AmbientMismatch("target ring lacks the parameter variables")
            subs += [MultiPoly.var(ncoords + k, tgt_vars) for k in range(self.nvars - self.ncoords)]
        diffs = [ext_d(PolyForm.function(p, ncoords)) for p in images]
        out = PolyForm.zero(ncoords, self.q, tgt_vars)
        for I, c in self.coeffs.items():
            term = PolyForm.function(c.subs(subs), ncoords)
            for i in I:
                term = wedge(term, diffs[i])
            out = out + term
        return out

    def to_str(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i}" for i in range(self.nvars)]
        if not self.coeffs:
            return "0"
        parts = []
        for I in sorted(self.coeffs):
            basis = "*".join(f"d{names[i]}" for i in I)
            c = self.coeffs[I]
            if not basis:
                parts.append(c.to_str(names))
                continue
            body = c.to_str(names)
            if len(c.terms) == 1:
                if body == "1":
                    parts.append(basis)
                elif body == "-1":
                    parts.append("-" + basis)
                else:
                    parts.append(f"{body}*{basis}")
            else:
                parts.append(f"({body})*{basis}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"PolyForm[{self.q}]({self.to_str()})"

    # vectorization against a fixed monomial basis
    def basis_keys(self) -> list[tuple]:
        return sorted((I, e) for I, c in self.coeffs.items() for e in c.terms)


class PolyField:
    """A polynomial vector field ``Σ comps[i] ∂/∂x_i``."""

    __slots__ = ("ncoords", "nvars", "comps")

    def __init__(self, comps: Sequence[MultiPoly], ncoords: int | None = None):
        self.comps = list(comps)
        self.ncoords = len(self.comps) if ncoords is None else ncoords
        if len(self.comps) != self.ncoords:
            raise AmbientMismatch("component count must equal coordinate count")
        self.nvars = self.comps[0].nvars

    @classmethod
    def radial(cls, ncoords: int, nvars: int | None = None) -> "PolyField":
        nvars = ncoords if nvars is None else nvars
        return cls([MultiPoly.var(i, nvars) for i in range(ncoords)])

    @classmethod
    def coordinate(cls, i: int, ncoords: int, nvars: int | None = None) -> "PolyField":
        nvars = ncoords if nvars is None else nvars
        return cls([MultiPoly.const(int(j == i), nvars) for j in range(ncoords)])

    @classmethod
    def constant(cls, vec: Sequence, nvars: int | None = None) -> "PolyField":
        nvars = len(vec) if nvars is None else nvars
        return cls([MultiPoly.const(c, nvars) for c in vec])

    @classmethod
    def linear(cls, J, nvars: int | None = None) -> "PolyField":
        """Linear field with Jacobian J: component i is Σ_j J[i][j] x_j."""
        rows = J.rows if hasattr(J, "rows") else J
        n = len(rows)
        nvars = n if nvars is None else nvars
        comps = []
        for i in range(n):
            terms = {}
            for j in range(n):
                if rows[i][j] != 0:
                    e = [0] * nvars
                    e[j] = 1
                    terms[tuple(e)] = rows[i][j]
            comps.append(MultiPoly(nvars, terms))
        return cls(comps)

    def jacobian(self) -> list[list]:
        """Jacobian of a linear field (raises if some component is not linear)."""
        out = []
        for c in self.comps:
            if not c.is_zero() and (not c.is_homogeneous(range(self.ncoords)) or c.degree() != 1):
                raise ValueError("field is not linear")
            row = []
            for j in range(self.ncoords):
                e = [0] * self.nvars
                e[j] = 1
                row.append(c.terms.get(tuple(e), Fraction(0)))
            out.append(row)
        return out

    def apply(self, p: MultiPoly) -> MultiPoly:
        """Derivation v(p) = Σ v_i ∂p/∂x_i."""
        out = MultiPoly.zero(p.nvars)
        for i, c in enumerate(self.comps):
            if not c.is_zero():
                out = out + c * p.diff(i)
        return out

    def bracket(self, other: "PolyField") -> "PolyField":
        """Commutator of derivations [v, w] = v∘w − w∘v."""
        return PolyField([self.apply(b) - other.apply(a) for a, b in zip(self.comps, other.comps)])

    def __add__(self, other: "PolyField") -> "PolyField":
        return PolyField([a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other: "PolyField") -> "PolyField":
        return PolyField([a - b for a, b in zip(self.comps, other.comps)])

    def __mul__(self, c) -> "PolyField":
        return PolyField([a * c for a in self.comps])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PolyField) and self.comps == other.comps

    def __hash__(self):
        return hash(tuple(self.comps))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __repr__(self):
        parts = [f"({c})*d/dx{i}" for i, c in enumerate(self.comps) if not c.is_zero()]
        return "PolyField(" + " + ".join(parts) + ")"


# operations

def wedge(a: PolyForm, b: PolyForm) -> PolyForm:
    a._check(b)
    q = a.q + b.q
    if q > a.ncoords:
        return PolyForm._raw(a.ncoords, q, {}, a.nvars)
    out: dict = {}
    for I, f in a.coeffs.items():
        for J, g in b.coeffs.items():
            m = _merge(I, J)
            if m is None:
                continue
            sign, K = m
            term = f * g if sign == 1 else -(f * g)
            out[K] = out[K] + term if K in out else term
    return PolyForm._raw(a.ncoords, q, out, a.nvars)


def ext_d(a: PolyForm) -> PolyForm:
    out: dict = {}
    for I, f in a.coeffs.items():
        for j in range(a.ncoords):
            df = f.diff(j)
            if df.is_zero():
                continue
            m = _merge((j,), I)
            if m is None:
                continue
            sign, K = m
            term = df if sign == 1 else -df
            out[K] = out[K] + term if K in out else term
    return PolyForm._raw(a.ncoords, a.q + 1, out, a.nvars)


def _contract_one(v: PolyField, a: PolyForm) -> PolyForm:
    if a.q == 0:
        raise DegreeUnderflow("cannot contract a 0-form")
    if v.ncoords != a.ncoords:
        raise AmbientMismatch("field and form live on different ambients")
    out: dict = {}
    for I, f in a.coeffs.items():
        for k, i in enumerate(I):
            vi = v.comps[i]
            if vi.is_zero():
                continue
            K = I[:k] + I[k + 1 :]
            term = vi * f if k % 2 == 0 else -(vi * f)
            out[K] = out[K] + term if K in out else term
    return PolyForm._raw(a.ncoords, a.q - 1, out, a.nvars)


def contract(v: PolyField | Sequence[PolyField], a: PolyForm) -> PolyForm:
    """Interior product.  For a list, the first field is applied first:
    ``contract([v1, v2], a) = i_{v2}(i_{v1} a)``."""
    fields = [v] if isinstance(v, PolyField) else list(v)
    if len(fields) > a.q:
        raise DegreeUnderflow(f"{len(fields)} contractions exceed form degree {a.q}")
    for f in fields:
        a = _contract_one(f, a)
    return a


def lie_derivative(v: PolyField, a: PolyForm) -> PolyForm:
    """Cartan: L_v a = i_v(da) + d(i_v a)."""
    out = contract(v, ext_d(a))
    if a.q > 0:
        out = out + ext_d(contract(v, a))
    return out


@dataclass(frozen=True)
class IntegrabilityVerdict:
    integrable: bool
    failed: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.integrable


def check_integrable(a: PolyForm) -> IntegrabilityVerdict:
    if a.is_zero():
        raise ZeroForm("integrability of the zero form")
    if a.q == 0:
        raise DegreeUnderflow("integrability needs form degree >= 1")
    da = ext_d(a)
    if a.q == 1:
        ok = wedge(a, da).is_zero()
        return IntegrabilityVerdict(ok, None if ok else "a^da")
    coords = [PolyField.coordinate(i, a.ncoords, a.nvars) for i in range(a.ncoords)]
    for V in combinations(range(a.ncoords), a.q - 1):
        iv = contract([coords[i] for i in reversed(V)], a)
        if not wedge(iv, a).is_zero():
            return IntegrabilityVerdict(False, "decomposability", V)
        if not wedge(iv, da).is_zero():
            return IntegrabilityVerdict(False, "integrability", V)
    return IntegrabilityVerdict(True)


def check_euler(a: PolyForm, m: int) -> bool:
    """i_R(da) = (m+q)·a for a homogeneous, radially annihilated form."""
    deg = a.coefficient_degree()
    if not a.is_zero() and deg != m:
        raise NotHomogeneous(f"coefficients are not homogeneous of degree {m}")
    R = PolyField.radial(a.ncoords, a.nvars)
    if a.q > 0 and not contract(R, a).is_zero():
        raise NotRadiallyAnnihilated("i_R a != 0")
    return contract(R, ext_d(a)) == a * (m + a.q)


def radial(ncoords: int, nvars: int | None = None) -> PolyField:
    return PolyField.radial(ncoords, nvars)


def form_monomial_basis(ncoords: int, q: int, m: int, nvars: int | None = None) -> list[tuple]:
    """Keys (I, exponent) spanning q-forms with coefficient degree m."""
    nvars = ncoords if nvars is None else nvars
    mons = monomials(nvars, m, range(ncoords))
    return [(I, e) for I in combinations(range(ncoords), q) for e in mons]


def form_to_vector(a: PolyForm, keys: Sequence[tuple]) -> list:
    zero = Fraction(0)
    out = []
    for I, e in keys:
        c = a.coeffs.get(I)
        out.append(c.terms.get(e, zero) if c is not None else zero)
    return out


def form_from_vector(vec: Sequence, keys: Sequence[tuple], ncoords: int, q: int, nvars: int | None = None) -> PolyForm:
    nvars = ncoords if nvars is None else nvars
    buckets: dict = {}
    for (I, e), c in zip(keys, vec):
        if c != 0:
            buckets.setdefault(I, {})[e] = c
    return PolyForm(ncoords, q, {I: MultiPoly(nvars, t) for I, t in buckets.items()}, nvars)
