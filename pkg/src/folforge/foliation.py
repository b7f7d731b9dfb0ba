"""Foliations on projective space given by twisted forms on the affine cone.

A codimension-q foliation of degree d on P^n is a q-form ω on C^{n+1} with
homogeneous coefficients of degree m = d + 1, i_R ω = 0, integrable, and
with coefficient gcd 1.  Everything with poles is handled through cleared
polynomial representatives: "ω/h is closed" is tested as h·dω = dh∧ω.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import sampling
from .errors import (
    ClassificationIncomplete,
    DegenerateEmbedding,
    DegreeMismatch,
    GcdNotOne,
    InhomogeneousInput,
    NotLowDegree,
    RankDeficientProjection,
    ResidueConstraintViolated,
    ZeroDenominator,
    ZeroForm,
)
from .exactcore.gcd import poly_gcd_many
from .exactcore.linalg import Matrix, in_span, kernel, rank, solve_affine
from .exactcore.poly import MultiPoly, from_vector, linear_form, monomials, to_vector
from .extalg import (
    PolyField,
    PolyForm,
    check_integrable,
    contract,
    ext_d,
    form_from_vector,
    form_monomial_basis,
    form_to_vector,
    wedge,
)


@dataclass(frozen=True)
class FoliationSpec:
    n: int
    q: int
    omega: PolyForm

    def __post_init__(self):
        if self.omega.ncoords != self.n + 1:
            raise ValueError("form does not live on C^{n+1}")
        if self.omega.q != self.q:
            raise ValueError("form degree differs from the codimension")
        if self.omega.is_zero():
            raise ZeroForm("zero form")
        if self.omega.coefficient_degree() is None:
            raise InhomogeneousInput("coefficients are not homogeneous of one degree")

    @property
    def m(self) -> int:
        return self.omega.coefficient_degree()

    @property
    def degree(self) -> int:
        return self.m - 1

    @property
    def normal_degree(self) -> int:
        return self.degree + self.q + 1

    @property
    def canonical_degree(self) -> int:
        return self.degree + self.q - self.n

    @property
    def slope(self) -> Fraction:
        return Fraction((self.n - self.q) - self.degree, self.n - self.q)

    def check_invariants(self) -> dict:
        R = PolyField.radial(self.omega.ncoords, self.omega.nvars)
        return {
            "radial": contract(R, self.omega).is_zero(),
            "integrable": check_integrable(self.omega).integrable,
            "gcd_one": singular_divisorial_part(self.omega).is_constant(),
        }


def _coords(omega: PolyForm) -> range:
    return range(omega.ncoords)


def singular_divisorial_part(omega: PolyForm) -> MultiPoly:
    """Gcd of all coefficients; 1 iff the singular set has codimension >= 2."""
    if omega.is_zero():
        raise ZeroForm("zero form has no singular set")
    return poly_gcd_many(list(omega.coeffs.values()))


def degree_of(omega: PolyForm, route: str = "coefficient", seed=0) -> int:
    """Degree of the foliation.

    ``coefficient``: m - 1.  ``tangency``: pull back along a random linear
    embedding of P^q, write the pullback as h·i_R(vol), return deg h (the
    tangency divisor, already offset by the q+1 coming from i_R vol)."""
    m = omega.coefficient_degree()
    if m is None:
        raise InhomogeneousInput("coefficients are not homogeneous")
    if not singular_divisorial_part(omega).is_constant():
        raise GcdNotOne("coefficients share a common factor")
    if route == "coefficient":
        return m - 1
    if route != "tangency":
        raise ValueError(f"unknown route {route!r}")
    q, N = omega.q, omega.ncoords
    rng = sampling.make_rng(seed)
    extra = omega.nvars - N
    for _ in range(sampling.MAX_ATTEMPTS):
        B = sampling.rand_matrix(rng, N, q + 1)
        nv = q + 1 + extra
        images = [linear_form(B.rows[i], nv) for i in range(N)]
        pulled = omega.pullback(images, q + 1)
        if pulled.is_zero():
            continue
        y0 = MultiPoly.var(0, nv)
        # i_R vol has coefficient (-1)^0 y_0 on e_{1..q}
        c = pulled.coefficient(tuple(range(1, q + 1)))
        h = c.exact_div(y0)
        if h is None or h.is_zero():
            continue
        R = PolyField.radial(q + 1, nv)
        if pulled != contract(R, PolyForm.volume(q + 1, nv)) * h:
            continue
        return h.degree_on(range(q + 1))
    raise DegenerateEmbedding("every sampled embedding was degenerate")


def make_log_family(lambdas: Sequence, fs: Sequence[MultiPoly], ncoords: int | None = None) -> PolyForm:
    """Σ λ_i (Π_{j≠i} f_j) df_i, the cleared form of Σ λ_i df_i/f_i."""
    if len(lambdas) != len(fs) or len(fs) < 2:
        raise ValueError("need k >= 2 residues and polynomials")
    ncoords = fs[0].nvars if ncoords is None else ncoords
    degs = []
    for f in fs:
        if f.is_zero() or not f.is_homogeneous(range(ncoords)):
            raise InhomogeneousInput("each f_i must be a nonzero homogeneous polynomial")
        degs.append(f.degree_on(range(ncoords)))
    total = sum((lam * d for lam, d in zip(lambdas, degs)), MultiPoly.zero(fs[0].nvars) if any(isinstance(l, MultiPoly) for l in lambdas) else Fraction(0))
    if total != 0:
        raise ResidueConstraintViolated(f"sum of residue times degree is {total}, not 0")
    out = PolyForm.zero(ncoords, 1, fs[0].nvars)
    for i, (lam, f) in enumerate(zip(lambdas, fs)):
        prod = MultiPoly.const(1, f.nvars)
        for j, g in enumerate(fs):
            if j != i:
                prod = prod * g
        out = out + ext_d(PolyForm.function(f, ncoords)) * (prod * lam)
    return out


def make_linear_pullback(A, eta: PolyForm) -> PolyForm:
    """Pull back η on C^{m+1} along x -> A x with A of size (m+1)×(n+1)."""
    A = A if isinstance(A, Matrix) else Matrix(A)
    if A.nrows != eta.ncoords:
        raise ValueError("matrix rows must match the target coordinates")
    if A.nrows > A.ncols or rank(A) != A.nrows:
        raise RankDeficientProjection("projection matrix must have full row rank")
    nv = A.ncols + (eta.nvars - eta.ncoords)
    images = [linear_form(A.rows[i], nv) for i in range(A.nrows)]
    return eta.pullback(images, A.ncols)


@dataclass
class TangentFormSpace:
    basis: list
    kernel: list
    relations: list

    @property
    def quotient_dimension(self) -> int:
        return len(self.basis)


def _admissible_kernel(ncoords: int, nvars: int, m: int, conditions) -> tuple[list, list]:
    keys = form_monomial_basis(ncoords, 1, m, nvars)
    R = PolyField.radial(ncoords, nvars)
    cols = []
    for I, e in keys:
        w = PolyForm(ncoords, 1, {I: MultiPoly(nvars, {e: 1})}, nvars)
        images = [contract(R, w).coefficient(())]
        images += [cond(w) for cond in conditions]
        cols.append(images)
    # vectorize each image polynomial over the union of its monomials
    n_img = len(cols[0]) if cols else 0
    rows = []
    for k in range(n_img):
        mons = sorted({e for col in cols for e in col[k].terms})
        for e in mons:
            rows.append([col[k].terms.get(e, Fraction(0)) for col in cols])
    return keys, kernel(rows, len(keys))


def tangent_form_space(fields: Sequence[PolyField], coeffdeg: int, context=None) -> TangentFormSpace:
    """1-forms with coefficient degree ``coeffdeg``, i_R ω = 0 and i_v ω ≡ 0
    (mod the quadric when a context is given), with relations split off."""
    if coeffdeg < 1:
        raise ValueError("coeffdeg must be >= 1")
    fields = list(fields)
    ncoords = fields[0].ncoords if fields else context.ncoords
    nvars = fields[0].nvars if fields else ncoords
    reduce = context.reduce if context is not None else (lambda p: p)
    conds = [lambda w, v=v: reduce(contract(v, w).coefficient(())) for v in fields]
    keys, ker = _admissible_kernel(ncoords, nvars, coeffdeg, conds)
    forms = [form_from_vector(v, keys, ncoords, 1, nvars) for v in ker]
    if context is None:
        return TangentFormSpace(forms, forms, [])
    rel_forms = context.relation_forms(coeffdeg)
    rel_vecs = [form_to_vector(r, keys) for r in rel_forms]
    for v in rel_vecs:
        if not in_span(ker, v):
            raise AssertionError("a quadric relation is not a solution; the fields do not preserve q")
    chosen, span = [], list(rel_vecs)
    for v, f in zip(ker, forms):
        if not in_span(span, v):
            chosen.append(f)
            span.append(v)
    return TangentFormSpace(chosen, forms, rel_forms)


def tangent_form_solve(fields: Sequence[PolyField], coeffdeg: int, context=None) -> list[PolyForm]:
    return tangent_form_space(fields, coeffdeg, context).basis


def closed_one_form_check(omega: PolyForm, h: MultiPoly) -> bool:
    """True iff h·dω = dh∧ω, i.e. ω/h is closed."""
    if h.is_zero():
        raise ZeroDenominator("h must be nonzero")
    dh = ext_d(PolyForm.function(h, omega.ncoords))
    return ext_d(omega) * h == wedge(dh, omega)


def invariante_theta(omega: PolyForm, eta: PolyForm, m, clearing: MultiPoly | None = None) -> PolyForm:
    """θ = η∧ω + m·dω.

    With poles, pass the cleared form ``eta = h·η_true`` and ``clearing = h``:
    the function forms η∧ω + m·h·dω = h·θ and divides by h exactly."""
    d_omega = ext_d(omega)
    if clearing is None:
        return wedge(eta, omega) + d_omega * m
    cleared = wedge(eta, omega) + d_omega * (clearing * m)
    return cleared.div(clearing)


def map_component_solve(omega: PolyForm, d: int) -> list[MultiPoly]:
    """Basis (reduced echelon, graded-lex) of {P of degree d : dP∧dω = 0}."""
    N, nv = omega.ncoords, omega.nvars
    mons = monomials(nv, d, range(N))
    d_omega = ext_d(omega)
    images = []
    for e in mons:
        dP = ext_d(PolyForm.function(MultiPoly(nv, {e: 1}), N))
        images.append(wedge(dP, d_omega))
    keys = sorted({k for w in images for k in w.basis_keys()})
    rows = [[w.coeffs[I].terms.get(e, Fraction(0)) if I in w.coeffs else Fraction(0) for w in images] for I, e in keys]
    ker = kernel(rows, len(mons)) if rows else _identity_rows(len(mons))
    return [from_vector(v, mons, nv) for v in ker]


def _identity_rows(n: int) -> list[list]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _constant_kernel(a: PolyForm) -> list[list]:
    """Constant vectors v with i_v a = 0 and i_v da = 0."""
    N = a.ncoords
    da = ext_d(a)
    images = []
    for i in range(N):
        v = PolyField.coordinate(i, N, a.nvars)
        parts = [contract(v, a)]
        if not da.is_zero():
            parts.append(contract(v, da))
        images.append(parts)
    rows = []
    for k in range(len(images[0])):
        keys = sorted({key for im in images for key in im[k].basis_keys()})
        for I, e in keys:
            rows.append([im[k].coeffs[I].terms.get(e, Fraction(0)) if I in im[k].coeffs else Fraction(0) for im in images])
    return kernel(rows, N) if rows else _identity_rows(N)


def essential_variables(a: PolyForm) -> int:
    if a.is_zero():
        raise ZeroForm("zero form")
    return a.ncoords - len(_constant_kernel(a))


def essential_linear_forms(a: PolyForm) -> list[MultiPoly]:
    """Reduced echelon basis of the linear forms killed by every constant
    symmetry of ``a``; ``a`` is a pullback along these forms."""
    ker = _constant_kernel(a)
    N = a.ncoords
    ann = kernel(ker, N) if ker else _identity_rows(N)
    return [linear_form(v, a.nvars) for v in ann]


def _proportional(a: PolyForm, b: PolyForm):
    """Scalar c with a = c·b, or None."""
    if b.is_zero():
        return None if not a.is_zero() else Fraction(0)
    I = min(b.coeffs)
    e, lc = b.coeffs[I].leading()
    if I not in a.coeffs:
        return None
    c = a.coeffs[I].terms.get(e, Fraction(0)) / lc
    return c if c != 0 and a == b * c else None


def proportional(a: PolyForm, b: PolyForm) -> bool:
    return _proportional(a, b) is not None


@dataclass
class Classification:
    degree: int
    q: int
    kind: str
    case1: bool = False
    case2: bool = False
    essential: int = 0
    linear_forms: list = field(default_factory=list)
    quadric: MultiPoly | None = None
    vector_field: list | None = None

    def as_dict(self) -> dict:
        out = {
            "degree": self.degree,
            "codim": self.q,
            "kind": self.kind,
            "case1": self.case1,
            "case2": self.case2,
            "essential_variables": self.essential,
            "linear_forms": [str(p) for p in self.linear_forms],
        }
        if self.quadric is not None:
            out["quadric"] = str(self.quadric)
        if self.vector_field is not None:
            out["vector_field_matrix"] = [[str(x) for x in r] for r in self.vector_field]
        return out


def _wedge_differentials(polys: Sequence[MultiPoly], ncoords: int) -> PolyForm:
    out = PolyForm.function(MultiPoly.const(1, polys[0].nvars), ncoords)
    for p in polys:
        out = wedge(out, ext_d(PolyForm.function(p, ncoords)))
    return out


def _try_case1(omega: PolyForm, q: int):
    lin = map_component_solve(omega, 1)
    if len(lin) != q:
        return None
    quad = map_component_solve(omega, 2)
    products = [a * b for i, a in enumerate(lin) for b in lin[i:]]
    mons = monomials(omega.nvars, 2, range(omega.ncoords))
    span = [to_vector(p, mons) for p in products]
    Q = None
    for p in quad:
        v = to_vector(p, mons)
        if not in_span(span, v):
            Q = p
            break
    if Q is None:
        return None
    target = _wedge_differentials(lin + [Q], omega.ncoords)
    if _proportional(ext_d(omega), target) is None:
        return None
    return lin, Q


def _try_case2(omega: PolyForm, q: int):
    d_omega = ext_d(omega)
    ess = essential_linear_forms(d_omega)
    if len(ess) > q + 2:
        return None
    N, nv = omega.ncoords, omega.nvars
    phi = [to_vector(L, monomials(nv, 1, range(N))) for L in ess]
    # pad with coordinate functionals to reach q + 2 independent forms
    for i in range(N):
        if len(phi) == q + 2:
            break
        e = [Fraction(int(j == i)) for j in range(N)]
        if not in_span(phi, e):
            phi.append(e)
    if len(phi) != q + 2:
        return None
    # phi uses monomial order x0 > x1 > ..., which is coordinate order
    k = q + 2
    sigma_cols = []
    for j in range(k):
        sol = solve_affine(phi, [Fraction(int(i == j)) for i in range(k)], N)
        sigma_cols.append(sol[0])
    ext_nv = k + (nv - N)
    sigma_images = [linear_form([sigma_cols[j][i] for j in range(k)], ext_nv) for i in range(N)]
    theta = d_omega.pullback(sigma_images, k)
    X = []
    for j in range(k):
        idx = tuple(i for i in range(k) if i != j)
        c = theta.coefficient(idx)
        X.append(c if j % 2 == 0 else -c)
    field_ = PolyField(X)
    rebuilt = contract(field_, PolyForm.volume(k, ext_nv))
    phi_images = [linear_form(r, nv) for r in phi]
    if rebuilt.pullback(phi_images, N) != d_omega:
        return None
    try:
        jac = field_.jacobian()
    except ValueError:
        return None
    return [linear_form(r, nv) for r in phi], jac


def classify_low_degree(spec: FoliationSpec) -> Classification:
    omega, q = spec.omega, spec.q
    d = spec.degree
    if d > 1 or d < 0:
        raise NotLowDegree(f"degree {d} is not 0 or 1")
    if d == 0:
        forms = essential_linear_forms(omega)
        R = PolyField.radial(omega.ncoords, omega.nvars)
        ok = len(forms) == q + 1 and proportional(
            omega, contract(R, _wedge_differentials(forms, omega.ncoords))
        )
        if not ok:
            raise ClassificationIncomplete("degree-0 form is not a linear projection")
        return Classification(0, q, "linear projection", essential=len(forms), linear_forms=forms)
    ess = essential_variables(ext_d(omega))
    out = Classification(1, q, "", essential=ess)
    c1 = _try_case1(omega, q)
    if c1 is not None:
        out.case1 = True
        out.linear_forms, out.quadric = c1
    if ess <= q + 2:
        c2 = _try_case2(omega, q)
        if c2 is not None:
            out.case2 = True
            if not out.case1:
                out.linear_forms = c2[0]
            out.vector_field = [[x for x in r] for r in c2[1]]
    if not (out.case1 or out.case2):
        raise ClassificationIncomplete("neither degree-one normal form could be verified")
    out.kind = "both" if out.case1 and out.case2 else ("map to P(1^q,2)" if out.case1 else "linear pullback of a vector field")
    return out


def deformation_limit_check(Q: MultiPoly, H1: MultiPoly, H2: MultiPoly) -> bool:
    """Check the ε-family (1+2ε)QH₂dH₁ − QH₁dH₂ − εH₁H₂dQ."""
    N = Q.nvars
    for p, deg in ((Q, 2), (H1, 1), (H2, 1)):
        if p.is_zero() or not p.is_homogeneous() or p.degree() != deg:
            raise DegreeMismatch("need deg Q = 2 and deg H1 = deg H2 = 1, homogeneous")
    nv = N + 1
    Qe, H1e, H2e = (p.extend(nv) for p in (Q, H1, H2))
    eps = MultiPoly.var(N, nv)
    one = MultiPoly.const(1, nv)
    residues = [one + eps * 2, -one, -eps]
    degrees = [1, 1, 2]
    residue_ok = sum((r * d for r, d in zip(residues, degrees)), MultiPoly.zero(nv)).is_zero()
    omega = make_log_family(residues, [H1e, H2e, Qe], N)
    integrable = wedge(omega, ext_d(omega)).is_zero()
    zero_slice = omega.map_coeffs(lambda c: c.partial_eval({N: 0}))
    limit = make_log_family([1, -1], [H1, H2]) * Q
    limit_ok = zero_slice == limit.map_coeffs(lambda c: c.extend(nv))
    return integrable and residue_ok and limit_ok
