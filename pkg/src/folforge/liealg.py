"""Exact matrix Lie algebra utilities: brackets, orthogonal algebras,
nilpotent Jordan types, centralizers and the equation [x, y] = y."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import NoSolution, NotNilpotent, SizeMismatch
from .exactcore.linalg import Matrix, kernel, rank, solve_affine
from .exactcore.poly import MultiPoly


def as_matrix(a) -> Matrix:
    if isinstance(a, LieElement):
        return a.matrix
    if isinstance(a, Matrix):
        return a
    return Matrix([[Fraction(x) if isinstance(x, int) else x for x in r] for r in a])


@dataclass(frozen=True)
class LieElement:
    matrix: Matrix
    tag: str = "unknown"

    def __post_init__(self):
        if self.matrix.nrows != self.matrix.ncols:
            raise SizeMismatch("Lie elements are square")
        if self.tag == "nilpotent" and not is_nilpotent(self.matrix):
            raise NotNilpotent("tagged nilpotent but some power is nonzero")


def _square(*ms: Matrix) -> int:
    n = ms[0].nrows
    for m in ms:
        if m.nrows != n or m.ncols != n:
            raise SizeMismatch("matrices must be square of equal size")
    return n


def bracket(a, b) -> Matrix:
    a, b = as_matrix(a), as_matrix(b)
    _square(a, b)
    return a @ b - b @ a


def is_in_orthogonal(a, Q) -> bool:
    """a^T Q + Q a = 0."""
    a, Q = as_matrix(a), as_matrix(Q)
    _square(a, Q)
    return (a.transpose() @ Q + Q @ a).is_zero()


def is_nilpotent(M) -> bool:
    M = as_matrix(M)
    return M.power(M.nrows).is_zero()


def jordan_partition(M) -> list[int]:
    """Block sizes of a nilpotent matrix, from ranks of its powers."""
    M = as_matrix(M)
    n = _square(M)
    if not is_nilpotent(M):
        raise NotNilpotent("matrix is not nilpotent")
    ranks = [n]
    P = Matrix.identity(n)
    while ranks[-1]:
        P = P @ M
        ranks.append(rank(P.rows, n))
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    parts: list[int] = []
    for k in range(1, len(at_least)):
        parts += [k] * (at_least[k - 1] - at_least[k])
    return sorted(parts, reverse=True)


def _unit(n: int, i: int, j: int) -> Matrix:
    m = Matrix.zeros(n, n)
    m.rows[i][j] = Fraction(1)
    return m


def _flat(m: Matrix) -> list:
    return [x for r in m.rows for x in r]


def _unflat(v: Sequence, n: int) -> Matrix:
    return Matrix([list(v[i * n : (i + 1) * n]) for i in range(n)])


def _linear_system(n: int, maps) -> list[list]:
    """Rows of the stacked linear maps x -> map(x), unknowns = entries of x."""
    cols = []
    for i in range(n):
        for j in range(n):
            E = _unit(n, i, j)
            col = []
            for fn in maps:
                col += _flat(fn(E))
            cols.append(col)
    return [list(r) for r in zip(*cols)]


def _constraint_maps(constraint, n: int):
    if constraint is None or constraint == "gl":
        return []
    Q = as_matrix(constraint)
    if Q.nrows != n:
        raise SizeMismatch("constraint matrix has the wrong size")
    return [lambda x: x.transpose() @ Q + Q @ x]


def orthogonal_basis(Q) -> list[Matrix]:
    """Basis of so(Q) = {a : a^T Q + Q a = 0}."""
    Q = as_matrix(Q)
    n = Q.nrows
    rows = _linear_system(n, _constraint_maps(Q, n))
    return [_unflat(v, n) for v in kernel(rows, n * n)]


def centralizer_basis(n_elt, constraint=None) -> list[Matrix]:
    """Kernel of x -> [x, n] inside gl or inside so(Q) when Q is given."""
    N = as_matrix(n_elt)
    size = _square(N)
    maps = [lambda x: x @ N - N @ x] + _constraint_maps(constraint, size)
    rows = _linear_system(size, maps)
    return [_unflat(v, size) for v in kernel(rows, size * size)]


@dataclass
class BracketSolution:
    particular: Matrix
    kernel: list = field(default_factory=list)
    degenerate: bool = False

    @property
    def dimension(self) -> int:
        return len(self.kernel)


def bracket_eq_solutions(y, constraint=None) -> BracketSolution:
    """All x (in the constraint algebra) with [x, y] = y, as particular + kernel.

    The particular solution sets the free coordinates of the reduced echelon
    form to zero.  y = 0 is flagged degenerate (every x solves it)."""
    Y = as_matrix(y)
    size = _square(Y)
    if not is_nilpotent(Y):
        raise NotNilpotent("y must be nilpotent")
    cmaps = _constraint_maps(constraint, size)
    maps = [lambda x: x @ Y - Y @ x] + cmaps
    rows = _linear_system(size, maps)
    rhs = _flat(Y) + [Fraction(0)] * (size * size * len(cmaps))
    sol = solve_affine(rows, rhs, size * size)
    if sol is None:
        raise NoSolution("[x, y] = y has no solution in the given algebra")
    part, ker = sol
    return BracketSolution(_unflat(part, size), [_unflat(v, size) for v in ker], Y.is_zero())


def exp_nilpotent(M, t: MultiPoly) -> list[list[MultiPoly]]:
    """Σ_k M^k t^k / k! as a matrix of polynomials in the ring of ``t``."""
    M = as_matrix(M)
    n = _square(M)
    if not is_nilpotent(M):
        raise NotNilpotent("exponential only computed for nilpotent matrices")
    nv = t.nvars
    out = [[MultiPoly.const(int(i == j), nv) for j in range(n)] for i in range(n)]
    P = Matrix.identity(n)
    tk = MultiPoly.const(1, nv)
    for k in range(1, n):
        P = P @ M
        if P.is_zero():
            break
        tk = tk * t
        c = Fraction(1, factorial(k))
        for i in range(n):
            for j in range(n):
                if P.rows[i][j] != 0:
                    out[i][j] = out[i][j] + tk * (P.rows[i][j] * c)
    return out


def conjugate(M, P) -> Matrix:
    """P M P^{-1} for invertible P."""
    M, P = as_matrix(M), as_matrix(P)
    return P @ M @ inverse(P)


def inverse(P) -> Matrix:
    P = as_matrix(P)
    n = _square(P)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        sol = solve_affine(P.rows, e, n)
        if sol is None or sol[1]:
            raise ValueError("matrix is singular")
        cols.append(sol[0])
    return Matrix([list(r) for r in zip(*cols)])


def poly_matmul(A: list[list[MultiPoly]], B: list[list[MultiPoly]]) -> list[list[MultiPoly]]:
    n, m = len(A), len(B[0])
    nv = A[0][0].nvars
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = MultiPoly.zero(nv)
            for k in range(len(B)):
                if not A[i][k].is_zero() and not B[k][j].is_zero():
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def poly_det(A: list[list[MultiPoly]]) -> MultiPoly:
    from .exactcore.gcd import _bareiss_det

    return _bareiss_det(A, A[0][0].nvars)


# the quadratic form x2^2 - 2 x1 x3 + 2 x0 x4 used for the so(5) case analysis
SO5_FORM = Matrix(
    [[Fraction(v) for v in r] for r in [
        [0, 0, 0, 0, 1],
        [0, 0, 0, -1, 0],
        [0, 0, 1, 0, 0],
        [0, -1, 0, 0, 0],
        [1, 0, 0, 0, 0],
    ]]
)


def regular_nilpotent_so5() -> Matrix:
    """All-ones superdiagonal; lies in so(SO5_FORM) with a single block."""
    return Matrix([[Fraction(int(j == i + 1)) for j in range(5)] for i in range(5)])



def _from_field_entries(n: int, entries: Sequence[tuple[int, int]]) -> Matrix:
    m = Matrix.zeros(n, n)
    for i, j in entries:
        m.rows[i][j] = Fraction(1)
    return m


def so5_nilpotent_classes() -> dict[str, tuple[Matrix, Matrix]]:
    """Representatives (n, Q) of the three nonzero nilpotent classes of so(5):
    a single 5-block, a 3-block, and two 2-blocks.  The last two are the
    fields x1 d0 + x2 d1 and x1 d0 + x3 d2 with their quadrics."""
    q3 = Matrix([[Fraction(v) for v in r] for r in [
        [0, 0, -1, 0, 0],
        [0, 1, 0, 0, 0],
        [-1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ]])
    q22 = Matrix([[Fraction(v, 2) for v in r] for r in [
        [0, 0, 0, 1, 0],
        [0, 0, -1, 0, 0],
        [0, -1, 0, 0, 0],
        [1, 0, 0, 0, 0],
        [0, 0, 0, 0, 2],
    ]])
    return {
        "regular": (regular_nilpotent_so5(), SO5_FORM),
        "subregular": (_from_field_entries(5, [(0, 1), (1, 2)]), q3),
        "minimal": (_from_field_entries(5, [(0, 1), (2, 3)]), q22),
    }
