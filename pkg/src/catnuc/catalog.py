"""Standard algebras used throughout the tests and demos."""

from __future__ import annotations

import itertools
import random

import numpy as np

from .algebra import Algebra, FiniteMonoid, find_unit, transform_basis
from .fields import QQ, Field
from .groups import FiniteGroup
from . import linalg


def matrix_algebra(n: int, field: Field = QQ) -> Algebra:
    """M_n(k) on matrix units ``E_ab`` ordered row-major (e11, e12, ...)."""
    d = n * n
    c = field.zeros((d, d, d))
    for a, b, b2, e in itertools.product(range(n), repeat=4):
        if b == b2:
            c[a * n + b, b2 * n + e, a * n + e] = field.one
    names = tuple(f"e{a + 1}{b + 1}" for a in range(n) for b in range(n))
    return Algebra(field, c, field.eye(n).reshape(d), names)


def zero_algebra(n: int, field: Field = QQ) -> Algebra:
    return Algebra(field, field.zeros((n, n, n)))


def function_algebra(G: FiniteGroup, field: Field = QQ) -> Algebra:
    """k(G) in the basis of delta functions ``p_g`` (pointwise product)."""
    n = G.size
    c = field.zeros((n, n, n))
    for g in range(n):
        c[g, g, g] = field.one
    names = tuple(f"p_{G.name(g)}" for g in range(n))
    return Algebra(field, c, field.vector([1] * n), names)


def monoid_algebra(M: FiniteMonoid, field: Field = QQ) -> Algebra:
    """k[M] with basis the monoid elements."""
    n = M.size
    c = field.zeros((n, n, n))
    for a, b in itertools.product(range(n), repeat=2):
        c[a, b, M.table[a][b]] = field.one
    unit = field.zeros(n)
    unit[M.unit] = field.one
    return Algebra(field, c, unit, M.names)


def diagonal_algebra(n: int, field: Field = QQ) -> Algebra:
    """k^n with componentwise product."""
    c = field.zeros((n, n, n))
    for i in range(n):
        c[i, i, i] = field.one
    return Algebra(field, c, field.vector([1] * n))


def truncated_polynomials(n: int, field: Field = QQ) -> Algebra:
    """k[x]/(x^n) on the monomials 1, x, ..., x^(n-1)."""
    c = field.zeros((n, n, n))
    for i, j in itertools.product(range(n), repeat=2):
        if i + j < n:
            c[i, j, i + j] = field.one
    unit = field.zeros(n)
    unit[0] = field.one
    return Algebra(field, c, unit)


def upper_triangular(field: Field = QQ) -> Algebra:
    """2x2 upper triangular matrices on e11, e12, e22."""
    M2 = matrix_algebra(2, field)
    keep = [0, 1, 3]
    c = M2.c[np.ix_(keep, keep, keep)]
    return Algebra(field, c, field.vector([1, 0, 1]), ("e11", "e12", "e22"))


def random_algebra(n: int, field: Field, rng: random.Random, commutative: bool = False) -> Algebra:
    c = field.zeros((n, n, n))
    for i, j, k in itertools.product(range(n), repeat=3):
        if commutative and j < i:
            c[i, j, k] = c[j, i, k]
        else:
            c[i, j, k] = field.random_element(rng)
    return Algebra(field, c)


def random_invertible_matrix(n: int, field: Field, rng: random.Random) -> np.ndarray:
    while True:
        m = field.array([[field.random_element(rng) for _ in range(n)] for _ in range(n)])
        if linalg.rank(m, field) == n:
            return m


def random_change_of_basis(A: Algebra, rng: random.Random) -> Algebra:
    """A copy of ``A`` written in a random basis (unit carried along)."""
    P = random_invertible_matrix(A.dim, A.field, rng)
    B = transform_basis(A, P)
    if A.unit is None and find_unit(A) is not None:
        B = B.with_unit()
    return B


def associative_pool(field: Field, max_dim: int = 4) -> list[Algebra]:
    """Small unital associative algebras of dimension <= max_dim."""
    from .groups import cyclic_group

    pool = [
        diagonal_algebra(1, field),
        diagonal_algebra(2, field),
        diagonal_algebra(3, field),
        truncated_polynomials(2, field),
        truncated_polynomials(3, field),
        upper_triangular(field),
        function_algebra(cyclic_group(2), field),
        monoid_algebra(cyclic_group(3).as_monoid(), field),
        matrix_algebra(2, field),
        monoid_algebra(FiniteMonoid(((0, 1, 2), (1, 1, 1), (2, 2, 2)), 0), field),
    ]
    return [A for A in pool if A.dim <= max_dim]
