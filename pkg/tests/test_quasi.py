import random

import pytest
from hypothesis import given, settings, strategies as st

from catnuc.cocycles import cocycle_check, cyclic_cocycle, sign_table
from catnuc.errors import InvalidStructureError
from catnuc.fields import GF, QQ
from catnuc.groups import cyclic_group, trivial_group
from catnuc.quasi import (
    EMPTY,
    FreeWord,
    NlkGElement,
    associator_phi,
    generators,
    nl_coproduct,
    quasi_coassoc_check,
    quasi_coassoc_sides,
    random_word_element,
    reduce_letters,
    splitting_apply,
    splitting_hom,
)

Z2, Z3 = cyclic_group(2), cyclic_group(3)


def test_word_reduction():
    u = FreeWord.gen(0, 1)
    assert u * u.inverse() == EMPTY
    assert len(u * u * u.inverse()) == 1
    assert str(u * FreeWord.gen(1, 1, -1)) == "u01u11^-1"
    assert str(EMPTY) == "1"
    with pytest.raises(InvalidStructureError):
        FreeWord((((0, 1), 2),))


def test_delta_functions_are_orthogonal_idempotents():
    p0, p1 = NlkGElement.p(Z2, 0), NlkGElement.p(Z2, 1)
    assert p0 * p0 == p0
    assert (p0 * p1).terms == {}
    assert p0 + p1 == NlkGElement.one(Z2)


def test_words_commute_with_delta_functions():
    w = NlkGElement.u(Z3, 1, 2)
    p = NlkGElement.p(Z3, 2)
    assert p * w == w * p
    assert (w * NlkGElement.u(Z3, 1, 2, -1)) == NlkGElement.one(Z3)


def test_phi_is_invertible():
    for G in (trivial_group(), Z2, Z3):
        phi, inv = associator_phi(G)
        assert phi * inv == NlkGElement.one(G, QQ, 3)
        assert inv * phi == NlkGElement.one(G, QQ, 3)


@pytest.mark.parametrize("G", [trivial_group(), Z2, Z3], ids=["1", "Z2", "Z3"])
def test_quasi_coassociativity(G):
    assert quasi_coassoc_check(G)


def test_mirrored_conjugation_fails():
    phi, inv = associator_phi(Z2)
    sides = [quasi_coassoc_sides(x, (inv, phi)) for x in generators(Z2)]
    assert any(lhs != rhs for lhs, rhs in sides)


def test_function_part_is_a_sub_bialgebra():
    for a in range(3):
        d = nl_coproduct(NlkGElement.p(Z3, a))
        assert all(w1 == EMPTY and w2 == EMPTY for (_, w1), (_, w2) in d.terms)
        assert sorted((b, c) for (b, _), (c, _) in d.terms) == sorted(
            (b, c) for b in range(3) for c in range(3) if Z3.mul(b, c) == a
        )


def test_splitting_of_nontrivial_cocycle():
    rep = splitting_hom(sign_table(Z2, QQ, [0] * 7 + [1]))
    assert rep.splits_inclusion and rep.delta_compatible and rep.is_cocycle


def test_splitting_of_non_cocycle():
    rep = splitting_hom(sign_table(Z2, QQ, [0, 0, 0, 1, 0, 0, 0, 1]))
    assert rep.splits_inclusion and not rep.delta_compatible and not rep.is_cocycle


def test_splitting_over_gf7():
    rep = splitting_hom(cyclic_cocycle(3, GF(7)))
    assert rep.splits_inclusion and rep.delta_compatible


def test_splitting_sends_generators_to_cocycle_values():
    alpha = cyclic_cocycle(3, GF(7))
    img = splitting_apply(alpha, NlkGElement.u(Z3, 1, 2, field=GF(7)))
    assert [img[h] for h in range(3)] == [alpha(h, 1, 2) for h in range(3)]


# ------------------------------------------------------------ properties

letters = st.lists(st.tuples(st.tuples(st.integers(0, 1), st.integers(0, 1)), st.sampled_from([1, -1])), max_size=8)


@given(letters, letters)
def test_reduction_is_confluent(a, b):
    assert reduce_letters(reduce_letters(a) + reduce_letters(b)) == reduce_letters(a + b)


@given(letters)
def test_reduced_words_have_no_cancelling_pair(a):
    red = reduce_letters(a)
    assert all(not (x[0] == y[0] and x[1] == -y[1]) for x, y in zip(red, red[1:]))
    w = FreeWord(tuple(a))
    assert w * w.inverse() == EMPTY


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6))
def test_coproduct_is_multiplicative(seed):
    rng = random.Random(seed)
    x, y = random_word_element(Z2, rng, 2), random_word_element(Z2, rng, 2)
    assert nl_coproduct(x * y) == nl_coproduct(x) * nl_coproduct(y)


@settings(max_examples=10)
@given(st.integers(0, 10 ** 6))
def test_quasi_coassociativity_on_random_words(seed):
    rng = random.Random(seed)
    G = [Z2, Z3][seed % 2]
    elems = [random_word_element(G, rng, rng.randint(1, 3)) for _ in range(2)]
    assert quasi_coassoc_check(G, elements=elems)


@given(st.integers(0, 255))
def test_splitting_is_compatible_exactly_for_cocycles(bits):
    alpha = sign_table(Z2, QQ, [(bits >> k) & 1 for k in range(8)])
    rep = splitting_hom(alpha)
    assert rep.splits_inclusion
    assert rep.delta_compatible == cocycle_check(alpha)
