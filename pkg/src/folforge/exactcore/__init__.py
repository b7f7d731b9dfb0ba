"""Exact arithmetic substrate: scalars, sparse polynomials, gcds, linear algebra."""
from .scalars import GaussianRational, I, parse_scalar, scalar_str
from .poly import MultiPoly, from_vector, linear_form, monomials, to_vector, variables
from .gcd import (
    discriminant_univ,
    poly_gcd,
    poly_gcd_many,
    resultant_univ,
    squarefree_part,
)
from .linalg import Matrix, in_span, kernel, rank, rank_kernel, rref, solve_affine

__all__ = [
    "GaussianRational", "I", "parse_scalar", "scalar_str",
    "MultiPoly", "from_vector", "linear_form", "monomials", "to_vector", "variables",
    "discriminant_univ", "poly_gcd", "poly_gcd_many", "resultant_univ", "squarefree_part",
    "Matrix", "in_span", "kernel", "rank", "rank_kernel", "rref", "solve_affine",
]
