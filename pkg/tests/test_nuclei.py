import random

import pytest
from hypothesis import given, strategies as st

from catnuc import linalg
from catnuc.algebra import Algebra, associator, transform_basis
from catnuc.catalog import (
    function_algebra,
    matrix_algebra,
    monoid_algebra,
    random_algebra,
    random_invertible_matrix,
    truncated_polynomials,
    upper_triangular,
    zero_algebra,
)
from catnuc.errors import PreconditionError
from catnuc.fields import GF, QQ
from catnuc.groups import cyclic_group
from catnuc.linalg import Subspace
from catnuc.nuclei import (
    Side,
    commutative_nucleus_relations,
    nucleus,
    nucleus_system,
    unit_in_nuclei,
    verify_associator_identity,
)
from catnuc.oracles import enumerate_kernel, octonions, oracle_nucleus_rows, quaternions, sympy_kernel_rref


def adjoin_unit(A: Algebra) -> Algebra:
    """``k 1 + A`` with the new unit as basis vector 0."""
    n, F = A.dim, A.field
    c = F.zeros((n + 1, n + 1, n + 1))
    for i in range(n + 1):
        c[0, i, i] = F.one
        c[i, 0, i] = F.one
    c[1:, 1:, 1:] = A.c
    unit = F.zeros(n + 1)
    unit[0] = F.one
    return Algebra(F, c, unit)


def test_side_parse():
    assert Side.parse("left") is Side.LEFT
    assert Side.parse("M") is Side.MIDDLE
    with pytest.raises(ValueError):
        Side.parse("x")


@pytest.mark.parametrize("side", "lmr")
def test_octonion_nucleus_is_scalars(side):
    O = octonions()
    N = nucleus(O, side)
    assert N == Subspace.span([O.unit], 8)
    assert [tuple(r) for r in N.basis] == sympy_kernel_rref(oracle_nucleus_rows(3, side))


@pytest.mark.parametrize("side", "lmr")
def test_associative_algebras_are_their_own_nuclei(side):
    for A in (matrix_algebra(2), function_algebra(cyclic_group(4)), quaternions(), upper_triangular()):
        assert nucleus(A, side) == Subspace.full(A.dim, QQ)


def test_zero_dimensional_algebra():
    assert nucleus(zero_algebra(0), "l").dim == 0


def test_nucleus_against_gf3_enumeration():
    rng = random.Random(5)
    F = GF(3)
    for _ in range(10):
        A = random_algebra(2, F, rng)
        for side in "lmr":
            rows = [[int(x) for x in r] for r in nucleus_system(A, side)]
            found = enumerate_kernel(rows, 3, 2)
            assert len(found) == 3 ** nucleus(A, side).dim
            assert all(nucleus(A, side).contains(F.vector(v)) for v in found)


def test_nucleus_of_nonassociative_example():
    # e0 e0 = e1 e0 = e1, other products zero; J(e0, e0, e0) = -e1
    F = QQ
    c = F.zeros((2, 2, 2))
    c[0, 0, 1] = F.one
    c[1, 0, 1] = F.one
    A = Algebra(F, c)
    assert linalg.equal(associator(A, *(A.basis_vector(0),) * 3), F.vector([0, -1]))
    assert nucleus(A, "l") == Subspace.span([F.vector([1, -1])], 2)
    assert nucleus(A, "m") == Subspace.span([F.vector([0, 1])], 2)
    assert nucleus(A, "r") == Subspace.span([F.vector([0, 1])], 2)


def test_unit_in_nuclei():
    assert unit_in_nuclei(octonions())
    assert unit_in_nuclei(adjoin_unit(random_algebra(2, GF(5), random.Random(3))))
    with pytest.raises(PreconditionError):
        unit_in_nuclei(zero_algebra(2))


def test_commutative_relations_report():
    rep = commutative_nucleus_relations(truncated_polynomials(3))
    assert rep.is_commutative and rep.left_equals_right and rep.left_in_middle and rep.ok
    rep = commutative_nucleus_relations(matrix_algebra(2))
    assert not rep.is_commutative and rep.left_equals_right is None and rep.ok


def test_associator_identity_on_catalog():
    for A in (octonions(), monoid_algebra(cyclic_group(3).as_monoid()), zero_algebra(0)):
        assert verify_associator_identity(A)


# ------------------------------------------------------------ properties

seeds = st.integers(0, 10 ** 6)


@given(seeds, st.integers(1, 3))
def test_associator_identity_random(seed, n):
    assert verify_associator_identity(random_algebra(n, GF(7), random.Random(seed)))


@given(seeds, st.integers(1, 3))
def test_commutative_left_equals_right(seed, n):
    rng = random.Random(seed)
    A = random_algebra(n, GF(5), rng, commutative=True)
    for B in (A, adjoin_unit(A)):
        assert commutative_nucleus_relations(B).ok


@given(seeds, st.integers(1, 3), st.integers(1, 4))
def test_nucleus_invariant_under_scaling(seed, n, lam):
    F = GF(5)
    A = random_algebra(n, F, random.Random(seed))
    B = Algebra(F, A.c * F(lam))
    for side in "lmr":
        assert nucleus(A, side) == nucleus(B, side)


@given(seeds, st.integers(1, 3))
def test_nucleus_covariant_under_change_of_basis(seed, n):
    rng = random.Random(seed)
    F = GF(5)
    A = adjoin_unit(random_algebra(n, F, rng))
    P = random_invertible_matrix(A.dim, F, rng)
    B = transform_basis(A, P)
    Pinv = linalg.inverse(P, F)
    for side in "lmr":
        moved = Subspace.span([Pinv.dot(v) for v in nucleus(A, side).vectors()], A.dim, F)
        assert moved == nucleus(B, side)


@given(seeds, st.integers(1, 3))
def test_nucleus_elements_kill_the_associator(seed, n):
    rng = random.Random(seed)
    F = GF(3)
    A = adjoin_unit(random_algebra(n, F, rng))
    x, y = (F.vector([F.random_element(rng) for _ in range(A.dim)]) for _ in range(2))
    for a in nucleus(A, "l").vectors():
        assert linalg.is_zero(associator(A, a, x, y))
    for a in nucleus(A, "m").vectors():
        assert linalg.is_zero(associator(A, x, a, y))
    for a in nucleus(A, "r").vectors():
        assert linalg.is_zero(associator(A, x, y, a))
