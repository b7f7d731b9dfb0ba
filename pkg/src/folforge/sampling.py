"""Seeded generators of small random integers, polynomials and matrices."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .exactcore.linalg import Matrix, rank
from .exactcore.poly import MultiPoly, monomials

MAX_ATTEMPTS = 16


def make_rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def rand_int(rng: random.Random, bound: int = 5, nonzero: bool = False) -> int:
    while True:
        v = rng.randint(-bound, bound)
        if v or not nonzero:
            return v


def rand_poly(
    rng: random.Random,
    nvars: int,
    degree: int,
    idx: Sequence[int] | None = None,
    bound: int = 5,
) -> MultiPoly:
    """Dense random homogeneous polynomial (never zero)."""
    mons = monomials(nvars, degree, idx)
    while True:
        p = MultiPoly(nvars, {e: rand_int(rng, bound) for e in mons})
        if not p.is_zero():
            return p


def rand_matrix(rng: random.Random, rows: int, cols: int, bound: int = 5) -> Matrix:
    return Matrix([[Fraction(rand_int(rng, bound)) for _ in range(cols)] for _ in range(rows)])


def rand_full_rank(rng: random.Random, rows: int, cols: int, bound: int = 5) -> Matrix:
    for _ in range(64):
        M = rand_matrix(rng, rows, cols, bound)
        if rank(M) == min(rows, cols):
            return M
    raise RuntimeError("could not sample a full-rank matrix")


def rand_rational(rng: random.Random, bound: int = 5, nonzero: bool = True) -> Fraction:
    return Fraction(rand_int(rng, bound, nonzero), rng.randint(1, 3))
