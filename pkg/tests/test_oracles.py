import itertools
from fractions import Fraction

from hypothesis import given, strategies as st

from catnuc import linalg
from catnuc.algebra import is_associative
from catnuc.cocycles import function_bialgebra
from catnuc.fields import QQ
from catnuc.groups import cyclic_group
from catnuc.modcat import RModule
from catnuc.oracles import (
    OperatorOracle,
    brute_force_is_monoid,
    cayley_dickson_algebra,
    cd_multiply,
    enumerate_kernel,
    enumerate_monoids,
    octonions,
    quaternions,
    sympy_kernel_rref,
)


def norm(x):
    return sum(v * v for v in x)


def test_doubling_tower():
    assert [cayley_dickson_algebra(k).dim for k in range(4)] == [1, 2, 4, 8]
    assert is_associative(quaternions())
    assert not is_associative(octonions())


def test_imaginary_units_square_to_minus_one():
    for i in range(1, 8):
        e = tuple(Fraction(int(i == j)) for j in range(8))
        assert cd_multiply(e, e) == tuple(Fraction(-int(j == 0)) for j in range(8))


@given(st.lists(st.integers(-3, 3), min_size=16, max_size=16))
def test_octonion_norm_is_multiplicative(vals):
    x = tuple(Fraction(v) for v in vals[:8])
    y = tuple(Fraction(v) for v in vals[8:])
    assert norm(cd_multiply(x, y)) == norm(x) * norm(y)


def test_sympy_kernel_example():
    rows = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)]]
    assert sympy_kernel_rref(rows) == [(1, 0, Fraction(-1, 3)), (0, 1, Fraction(-2, 3))]
    assert sympy_kernel_rref([[Fraction(1)]]) == []


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=3))
def test_sympy_agrees_with_library_kernel(rows):
    frac = [[Fraction(v) for v in r] for r in rows]
    ours = [tuple(r) for r in linalg.kernel(QQ.array(rows)).basis]
    assert ours == sympy_kernel_rref(frac)


@given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=1, max_size=3))
def test_enumerated_kernel_size_matches_rank(rows):
    from catnuc.fields import GF

    F = GF(3)
    assert len(enumerate_kernel(rows, 3, 3)) == 3 ** linalg.kernel(F.array(rows), F).dim


def test_monoid_corpus():
    assert [len(enumerate_monoids(n)) for n in range(1, 5)] == [1, 4, 33, 624]
    for n in (1, 2, 3):
        assert all(brute_force_is_monoid(t) for t in enumerate_monoids(n))


def test_monoid_corpus_is_exhaustive_for_order_two():
    every = [(vals[:2], vals[2:]) for vals in itertools.product(range(2), repeat=4)]
    assert sorted(t for t in every if brute_force_is_monoid(t)) == enumerate_monoids(2)


def test_operator_tensor_of_trivial_modules():
    R = function_bialgebra(cyclic_group(3))
    orc = OperatorOracle(R.algebra, R.delta)
    T = list(RModule.trivial(R).action)
    TT = orc.tensor(T, T)
    assert all(linalg.equal(a, b) for a, b in zip(TT, T))


def test_operator_tensor_is_associative_up_to_equality():
    # k(G) is coassociative, so (X Y) Z and X (Y Z) carry the same action
    R = function_bialgebra(cyclic_group(2))
    orc = OperatorOracle(R.algebra, R.delta)
    X = list(RModule.regular(R).action)
    Y = [QQ.array([[1]]), QQ.array([[0]])]
    left = orc.tensor(orc.tensor(X, Y), X)
    right = orc.tensor(X, orc.tensor(Y, X))
    assert all(linalg.equal(a, b) for a, b in zip(left, right))
