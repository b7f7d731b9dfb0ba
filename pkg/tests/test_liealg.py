import random
from fractions import Fraction

import pytest
import sympy as sp
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, strategies as st

from folforge.errors import NotNilpotent
from folforge.exactcore.linalg import Matrix
from folforge.exactcore.poly import MultiPoly, variables
from folforge.liealg import (
    SO5_FORM,
    bracket,
    bracket_eq_solutions,
    centralizer_basis,
    conjugate,
    exp_nilpotent,
    is_in_orthogonal,
    jordan_partition,
    orthogonal_basis,
    poly_det,
    poly_matmul,
    so5_nilpotent_classes,
)
from folforge.quadvariety import affQ_build, sym_power_matrices
from folforge.sampling import rand_full_rank


def jordan(parts):
    n = sum(parts)
    M = Matrix.zeros(n, n)
    k = 0
    for p in parts:
        for i in range(p - 1):
            M.rows[k + i][k + i + 1] = Fraction(1)
        k += p
    return M


partitions = st.lists(st.integers(1, 3), min_size=1, max_size=2).map(lambda p: sorted(p, reverse=True))


def test_sym4_e_in_orthogonal_algebra():
    b = affQ_build()
    E, H, F = sym_power_matrices(4)
    for M in (E, H, F):
        assert is_in_orthogonal(M, b.ctx.matrix)


def test_named_partitions():
    E, _, _ = sym_power_matrices(4)
    assert jordan_partition(E) == [5]
    classes = so5_nilpotent_classes()
    assert jordan_partition(classes["subregular"][0]) == [3, 1, 1]
    assert jordan_partition(classes["minimal"][0]) == [2, 2, 1]
    for n, Q in classes.values():
        assert is_in_orthogonal(n, Q)


def test_centralizer_examples():
    n, Q = so5_nilpotent_classes()["regular"]
    assert len(centralizer_basis(n, Q)) == 2
    assert len(centralizer_basis(Matrix.zeros(3, 3))) == 9
    for k in (1, 2, 4):
        assert len(centralizer_basis(jordan([k]))) == k


def test_bracket_equation_regular():
    n, Q = so5_nilpotent_classes()["regular"]
    sol = bracket_eq_solutions(n, Q)
    diag = [sol.particular.rows[i][i] for i in range(5)]
    assert diag == [2, 1, 0, -1, -2]
    assert bracket(sol.particular, n) == n
    assert is_in_orthogonal(sol.particular, Q)
    kernel = {tuple(map(tuple, m.rows)) for m in sol.kernel}
    assert len(kernel) == 2 == len(centralizer_basis(n, Q))


def test_bracket_equation_degenerate_and_minimal():
    sol = bracket_eq_solutions(Matrix.zeros(3, 3))
    assert sol.degenerate and sol.dimension == 9
    n, Q = so5_nilpotent_classes()["minimal"]
    sol = bracket_eq_solutions(n, Q)
    assert bracket(sol.particular, n) == n and sol.dimension == len(centralizer_basis(n, Q))


def test_so5_form_dimension():
    assert len(orthogonal_basis(SO5_FORM)) == 10


def test_exp_of_jordan_block():
    (t,) = variables(1)
    out = exp_nilpotent(jordan([2]), t)
    assert out == [[MultiPoly.const(1, 1), t], [MultiPoly.const(0, 1), MultiPoly.const(1, 1)]]
    with pytest.raises(NotNilpotent):
        exp_nilpotent(Matrix.identity(2), t)


def test_exp_group_law_sym4():
    s, t = variables(2)
    E, _, _ = sym_power_matrices(4)
    lhs = poly_matmul(exp_nilpotent(E, s), exp_nilpotent(E, t))
    assert lhs == exp_nilpotent(E, s + t)


@given(partitions, st.integers(0, 10**6))
def test_partition_conjugation_invariant(parts, seed):
    n = sum(parts)
    P = rand_full_rank(random.Random(seed), n, n, 3)
    M = conjugate(jordan(parts), P)
    got = jordan_partition(M)
    assert got == parts
    assert sum(got) == n
    assert len(got) == n - DomainMatrix.from_Matrix(sp.Matrix(M.rows)).convert_to(sp.QQ).rank()


@given(partitions, st.integers(0, 10**6))
def test_centralizer_dimension_formula(parts, seed):
    n = sum(parts)
    M = conjugate(jordan(parts), rand_full_rank(random.Random(seed), n, n, 3))
    formula = sum((2 * i + 1) * p for i, p in enumerate(parts))
    assert len(centralizer_basis(M)) == formula
    # brute-force oracle: kernel of x -> xM - Mx in sympy
    S = sp.Matrix(M.rows)
    cols = []
    for k in range(n * n):
        U = sp.zeros(n, n)
        U[k // n, k % n] = 1
        cols.append(list(U * S - S * U))
    A = DomainMatrix.from_Matrix(sp.Matrix(cols)).convert_to(sp.QQ)
    assert n * n - A.rank() == formula


@given(partitions)
def test_exp_has_unit_determinant(parts):
    (t,) = variables(1)
    assert poly_det(exp_nilpotent(jordan(parts), t)) == MultiPoly.const(1, 1)
