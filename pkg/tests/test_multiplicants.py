import itertools
import random

import pytest
from hypothesis import given, strategies as st

from catnuc import linalg
from catnuc.algebra import FiniteMonoid, LinearMap, is_subalgebra_closed, multiplicative_defect
from catnuc.catalog import associative_pool, diagonal_algebra, matrix_algebra, truncated_polynomials
from catnuc.errors import InvalidStructureError, PreconditionError
from catnuc.fields import GF, QQ
from catnuc.groups import cyclic_group
from catnuc.linalg import Subspace
from catnuc.multiplicants import (
    MonoidMap,
    commutative_multiplicant_equality,
    linearize,
    monoid_multiplicant,
    multiplicant,
    multiplicant_pullback,
    verify_multiplicant_identity,
)
from catnuc.oracles import enumerate_monoids, octonions

Z2 = cyclic_group(2).as_monoid()
# unit 0; 1 and 2 are left zeros
LZ = FiniteMonoid(((0, 1, 2), (1, 1, 1), (2, 2, 2)), 0)


def test_trace_multiplicant_is_zero():
    tr = LinearMap(matrix_algebra(2), diagonal_algebra(1), QQ.array([[1, 0, 0, 1]]))
    assert multiplicant(tr, "l").dim == 0
    assert multiplicant(tr, "r").dim == 0


def test_corner_entry_multiplicants():
    M2 = matrix_algebra(2)
    f = LinearMap(M2, diagonal_algebra(1), QQ.array([[1, 0, 0, 0]]))
    e = QQ.eye(4)
    assert multiplicant(f, "l") == Subspace.span([e[0], e[2], e[3]], 4)
    assert multiplicant(f, "r") == Subspace.span([e[0], e[1], e[3]], 4)


def test_homomorphism_multiplicant_is_everything():
    A = truncated_polynomials(3)
    f = LinearMap(A, A, QQ.eye(3))
    assert multiplicant(f, "l") == Subspace.full(3)


def test_middle_side_rejected():
    A = truncated_polynomials(2)
    with pytest.raises(ValueError):
        multiplicant(LinearMap(A, A, QQ.eye(2)), "m")


def test_nonassociative_source_rejected():
    O = octonions()
    with pytest.raises(PreconditionError):
        multiplicant(LinearMap(O, O, QQ.eye(8)), "l")


def test_monoid_multiplicant_examples():
    assert monoid_multiplicant(MonoidMap(Z2, Z2, (0, 1)), "l").elements == (0, 1)
    assert monoid_multiplicant(MonoidMap(Z2, Z2, (0, 0)), "l").elements == (0, 1)
    swap = monoid_multiplicant(MonoidMap(Z2, Z2, (1, 0)), "l")
    assert swap.elements == () and not swap.contains_unit
    f = MonoidMap(LZ, LZ, (0, 0, 1))
    assert monoid_multiplicant(f, "l").elements == (0, 2)
    assert monoid_multiplicant(f, "r").elements == (0, 1)


def test_monoid_map_validation():
    with pytest.raises(InvalidStructureError):
        MonoidMap(Z2, Z2, (0,))
    with pytest.raises(InvalidStructureError):
        MonoidMap(Z2, Z2, (0, 2))
    with pytest.raises(PreconditionError):
        MonoidMap(Z2, Z2, (0, 1)).then(MonoidMap(LZ, LZ, (0, 1, 2)))


def test_pullback_of_identities():
    ident = MonoidMap(LZ, LZ, (0, 1, 2))
    pb = multiplicant_pullback(ident, ident)
    assert pb.ok and pb.pairs == ((0, 0), (1, 1), (2, 2))


def test_pullback_exhaustive_order_two():
    tables = [FiniteMonoid.from_table(t) for n in (1, 2) for t in enumerate_monoids(n)]
    for A, B, C in itertools.product(tables, repeat=3):
        for fi in itertools.product(range(B.size), repeat=A.size):
            for gi in itertools.product(range(C.size), repeat=B.size):
                assert multiplicant_pullback(MonoidMap(A, B, fi), MonoidMap(B, C, gi)).ok


# ------------------------------------------------------------ properties

seeds = st.integers(0, 10 ** 6)
POOL = associative_pool(GF(5))


def random_map(rng, F=GF(5)):
    A, B = rng.choice(POOL), rng.choice(POOL)
    return LinearMap(A, B, F.array([[F.random_element(rng) for _ in range(A.dim)] for _ in range(B.dim)]))


@given(seeds)
def test_multiplicant_identity(seed):
    assert verify_multiplicant_identity(random_map(random.Random(seed)))


@given(seeds)
def test_multiplicant_is_closed_and_f_multiplicative(seed):
    f = random_map(random.Random(seed))
    for side in "lr":
        S = multiplicant(f, side)
        assert is_subalgebra_closed(f.source, S)
        for u, v in itertools.product(S.vectors(), repeat=2):
            assert linalg.is_zero(multiplicative_defect(f, u, v))


@given(seeds)
def test_multiplicant_members_satisfy_defining_equation(seed):
    rng = random.Random(seed)
    f = random_map(rng)
    x = f.source.field.vector([f.source.field.random_element(rng) for _ in range(f.source.dim)])
    for a in multiplicant(f, "l").vectors():
        assert linalg.is_zero(multiplicative_defect(f, a, x))
    for a in multiplicant(f, "r").vectors():
        assert linalg.is_zero(multiplicative_defect(f, x, a))


@given(seeds)
def test_commutative_left_equals_right(seed):
    rng = random.Random(seed)
    F = GF(5)
    comm = [A for A in POOL if linalg.equal(A.c, A.c.transpose(1, 0, 2))]
    A, B = rng.choice(comm), rng.choice(comm)
    f = LinearMap(A, B, F.array([[F.random_element(rng) for _ in range(A.dim)] for _ in range(B.dim)]))
    assert commutative_multiplicant_equality(f).equal


@given(seeds)
def test_linearization_contains_monoid_multiplicant(seed):
    rng = random.Random(seed)
    tables = enumerate_monoids(3)
    S = FiniteMonoid.from_table(rng.choice(tables))
    T = FiniteMonoid.from_table(rng.choice(tables))
    f = MonoidMap(S, T, tuple(rng.randrange(3) for _ in range(3)))
    lin = linearize(f, QQ)
    for side in "lr":
        span = multiplicant(lin, side)
        for a in monoid_multiplicant(f, side).elements:
            assert span.contains(lin.source.basis_vector(a))


@given(seeds)
def test_monoid_multiplicant_is_closed(seed):
    rng = random.Random(seed)
    tables = enumerate_monoids(3)
    S = FiniteMonoid.from_table(rng.choice(tables))
    T = FiniteMonoid.from_table(rng.choice(tables))
    f = MonoidMap(S, T, tuple(rng.randrange(3) for _ in range(3)))
    mm = set(monoid_multiplicant(f, "l").elements)
    assert all(S.table[a][b] in mm for a in mm for b in mm)
    if f.is_homomorphism():
        assert mm == set(range(3))
