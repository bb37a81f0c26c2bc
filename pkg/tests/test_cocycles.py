import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from catnuc import linalg
from catnuc.catalog import random_invertible_matrix
from catnuc.cocycles import (
    Cocycle3,
    coboundary,
    cocycle_check,
    cocycle_failures,
    cocycle_pair,
    cocycle_pentagon_holds,
    constraint_from_cocycle,
    cyclic_cocycle,
    enumerate_sign_cocycles,
    function_bialgebra,
    isotypic_module,
    random_cochain,
    sign_table,
)
from catnuc.errors import InvalidStructureError, PreconditionError
from catnuc.fields import GF, QQ
from catnuc.groups import cyclic_group, klein_four_group, symmetric_group
from catnuc.modcat import NucleusPair, RModule, associativity_constraint, check_inv, check_normalization

Z2 = cyclic_group(2)
NONTRIVIAL_Z2 = [0] * 7 + [1]


def all_sign_tables(G):
    n3 = G.size ** 3
    return [sign_table(G, QQ, [(bits >> k) & 1 for k in range(n3)]) for bits in range(2 ** n3)]


def test_trivial_is_cocycle():
    for G in (Z2, symmetric_group(3)):
        assert cocycle_check(Cocycle3.trivial(G))


def test_zero_values_rejected():
    vals = QQ.zeros((2, 2, 2))
    with pytest.raises(InvalidStructureError):
        Cocycle3(Z2, QQ, vals)


def test_z2_enumeration_matches_brute_force():
    brute = [a for a in all_sign_tables(Z2) if cocycle_check(a)]
    found = enumerate_sign_cocycles(Z2)
    assert len(found) == 8
    assert set(found) == set(brute)


def test_enumeration_counts():
    assert len(enumerate_sign_cocycles(cyclic_group(3))) == 64
    assert len(enumerate_sign_cocycles(klein_four_group())) == 32768


def test_enumeration_contains_nontrivial_class():
    target = sign_table(Z2, QQ, NONTRIVIAL_Z2)
    assert target in enumerate_sign_cocycles(Z2)
    # not a coboundary of any sign-valued 2-cochain
    for bits in itertools.product((0, 1), repeat=4):
        beta = [[(-1) ** bits[0], (-1) ** bits[1]], [(-1) ** bits[2], (-1) ** bits[3]]]
        assert coboundary(Z2, beta) != target


def test_enumeration_refuses_large_groups():
    with pytest.raises(PreconditionError):
        enumerate_sign_cocycles(cyclic_group(5))
    with pytest.raises(PreconditionError):
        enumerate_sign_cocycles(Z2, GF(2))


def test_failures_listed():
    bad = sign_table(Z2, QQ, [0, 0, 0, 1, 0, 0, 0, 1])
    assert not cocycle_check(bad)
    assert cocycle_failures(bad)
    assert cocycle_failures(sign_table(Z2, QQ, NONTRIVIAL_Z2)) == []


def test_cyclic_cocycles():
    for power in range(3):
        assert cocycle_check(cyclic_cocycle(3, GF(7), power))
    assert cocycle_check(cyclic_cocycle(2, QQ))
    assert cyclic_cocycle(2, QQ) == sign_table(Z2, QQ, NONTRIVIAL_Z2)


def test_constraint_needs_a_cocycle():
    R = function_bialgebra(Z2)
    M = RModule.regular(R)
    with pytest.raises(PreconditionError):
        constraint_from_cocycle(sign_table(Z2, QQ, [1] + [0] * 7), M, M, M)


def test_cocycle_pair_gives_the_cocycle_constraint():
    F = GF(7)
    G = cyclic_group(3)
    alpha = cyclic_cocycle(3, F)
    R = function_bialgebra(G, F)
    rng = random.Random(11)
    mods = [RModule.regular(R), isotypic_module(R, [1, 2], random_invertible_matrix(2, F, rng))]
    for X, Y, Z in itertools.product(mods, repeat=3):
        p = cocycle_pair(alpha, R, X)
        assert check_inv(R, p) and check_normalization(p)
        got = associativity_constraint(p, NucleusPair.trivial(Y), NucleusPair.trivial(Z))
        assert linalg.equal(got, constraint_from_cocycle(alpha, X, Y, Z))


def test_pentagon_tracks_cocycle_on_z3():
    R = function_bialgebra(cyclic_group(3), GF(7))
    M = isotypic_module(R, [0, 1, 2])
    assert cocycle_pentagon_holds(cyclic_cocycle(3, GF(7)), M, M, M, M)


# ------------------------------------------------------------ properties

seeds = st.integers(0, 10 ** 6)


@given(seeds)
def test_coboundaries_are_cocycles(seed):
    rng = random.Random(seed)
    G = [Z2, cyclic_group(3), symmetric_group(3)][seed % 3]
    F = GF(5)
    assert cocycle_check(coboundary(G, random_cochain(G, F, rng), F))


@given(st.integers(0, 255))
def test_pentagon_iff_cocycle_on_regular_z2(bits):
    R = function_bialgebra(Z2)
    M = RModule.regular(R)
    alpha = sign_table(Z2, QQ, [(bits >> k) & 1 for k in range(8)])
    assert cocycle_pentagon_holds(alpha, M, M, M, M) == cocycle_check(alpha)


@settings(max_examples=20)
@given(st.integers(0, 63), st.integers(0, 63))
def test_sign_cocycles_form_a_group(i, j):
    found = enumerate_sign_cocycles(cyclic_group(3))
    a, b = found[i], found[j]
    prod = Cocycle3(a.group, QQ, a.values * b.values)
    assert prod in set(found)
    assert a.inverse() == a
