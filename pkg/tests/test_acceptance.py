"""Acceptance gate: one test per criterion, exact equality, fixed seeds.

A PASS/FAIL line per criterion is printed in the terminal summary (see
``conftest.py``) and by running this file directly.
"""

import itertools
import random
import time

from catnuc import linalg
from catnuc.algebra import FiniteMonoid, LinearMap, is_associative, is_commutative, is_subalgebra_closed, multiplicative_defect, restrict
from catnuc.catalog import associative_pool, function_algebra, matrix_algebra, random_algebra, random_invertible_matrix
from catnuc.cocycles import (
    cocycle_check,
    cocycle_pentagon_holds,
    enumerate_sign_cocycles,
    function_bialgebra,
    isotypic_module,
    sign_table,
)
from catnuc.fields import GF, QQ
from catnuc.groups import cyclic_group, symmetric_group, trivial_group
from catnuc.linalg import Subspace
from catnuc.modcat import (
    MultiplicantPair,
    RModule,
    associativity_constraint,
    gamma_element,
    multiplicant_check,
    multiplicant_gamma_membership,
    multiplicant_tensor,
    phi_is_morphism,
    random_multiplicant_pair,
    random_nucleus_pair,
    random_twist,
    tensor_pairs,
    twist_pair,
    verify_pentagon,
)
from catnuc.multiplicants import MonoidMap, multiplicant, multiplicant_pullback, verify_multiplicant_identity
from catnuc.nuclei import commutative_nucleus_relations, nucleus, verify_associator_identity
from catnuc.oracles import OperatorOracle, enumerate_monoids, octonions, oracle_nucleus_rows, sympy_kernel_rref
from catnuc.quasi import NlkGElement, associator_phi, quasi_coassoc_check, splitting_hom

SEED = 20240611


def small_modules(R, rng):
    """Modules of dimension at most 2: the 1- and 2-dimensional isotypic ones
    (in a random basis) and, over k(Z/2), the regular module."""
    mods = [isotypic_module(R, [g]) for g in range(R.dim)]
    mods.append(isotypic_module(R, [rng.randrange(R.dim), rng.randrange(R.dim)], random_invertible_matrix(2, QQ, rng)))
    if R.dim == 2:
        mods.append(RModule.regular(R))
    return mods


def test_criterion_01_associator_identity():
    start = time.perf_counter()
    assert verify_associator_identity(octonions())
    rng = random.Random(SEED)
    for _ in range(20):
        assert verify_associator_identity(random_algebra(rng.randint(1, 4), GF(7), rng))
    assert time.perf_counter() - start < 10


def test_criterion_02_octonion_nuclei():
    start = time.perf_counter()
    O = octonions()
    for side in "lmr":
        N = nucleus(O, side)
        assert N.dim == 1 and N == Subspace.span([O.unit], 8)
        assert is_subalgebra_closed(O, N) and is_associative(restrict(O, N))
        assert [tuple(r) for r in N.basis] == sympy_kernel_rref(oracle_nucleus_rows(3, side))
    assert time.perf_counter() - start < 5


def test_criterion_03_associative_coincidence():
    for A in (matrix_algebra(2, QQ), function_algebra(cyclic_group(4), QQ)):
        for side in "lmr":
            assert nucleus(A, side) == Subspace.full(A.dim, QQ)


def test_criterion_04_commutative_relations():
    rng = random.Random(SEED)
    for _ in range(50):
        A = random_algebra(3, GF(5), rng, commutative=True)
        assert is_commutative(A)
        rep = commutative_nucleus_relations(A)
        assert rep.left_equals_right and rep.left_in_middle


def test_criterion_05_multiplicant_identity_and_closure():
    rng = random.Random(SEED)
    F = GF(7)
    pool = associative_pool(F, max_dim=4)
    for _ in range(20):
        A, B = rng.choice(pool), rng.choice(pool)
        f = LinearMap(A, B, F.array([[F.random_element(rng) for _ in range(A.dim)] for _ in range(B.dim)]))
        assert verify_multiplicant_identity(f)
        for side in "lr":
            S = multiplicant(f, side)
            assert is_subalgebra_closed(A, S)
            for u, v in itertools.product(S.vectors(), repeat=2):
                assert linalg.is_zero(multiplicative_defect(f, u, v))
    trace = LinearMap(matrix_algebra(2), function_algebra(trivial_group()), QQ.array([[1, 0, 0, 1]]))
    assert multiplicant(trace, "l").dim == 0
    assert multiplicant(trace, "r").dim == 0


def test_criterion_06_monoid_composition_span():
    corpus = [FiniteMonoid.from_table(t) for n in (1, 2, 3) for t in enumerate_monoids(n)]
    assert len(corpus) == 1 + 4 + 33
    rng = random.Random(SEED)
    for _ in range(200):
        A, B, C = (rng.choice(corpus) for _ in range(3))
        f = MonoidMap(A, B, tuple(rng.randrange(B.size) for _ in range(A.size)))
        g = MonoidMap(B, C, tuple(rng.randrange(C.size) for _ in range(B.size)))
        pb = multiplicant_pullback(f, g)
        assert pb.lands_in_composite and pb.projection_multiplicative


def test_criterion_07_element_calculus_vs_oracle():
    start = time.perf_counter()
    rng = random.Random(SEED)
    for order in (2, 3):
        R = function_bialgebra(cyclic_group(order))
        orc = OperatorOracle(R.algebra, R.delta)
        mods = small_modules(R, rng)
        for _ in range(15):
            M, N, L = (rng.choice(mods) for _ in range(3))
            p, q, r = (random_nucleus_pair(R, X, rng) for X in (M, N, L))
            c = random_twist(R, rng)
            a = orc.nucleus_transformation(p.m.coeffs)
            b = orc.nucleus_transformation(q.m.coeffs)
            ab = orc.tensor_transformation(a, b, M.dim, list(N.action))
            ac = orc.twist_transformation(a, c.scalars(), list(M.action))
            pq, pc = tensor_pairs(p, q), twist_pair(p, c)
            assert linalg.equal(associativity_constraint(p, q, r), orc.constraint(a, list(N.action), list(L.action)))
            for X, Y in itertools.product(mods, repeat=2):
                xa, ya = list(X.action), list(Y.action)
                assert linalg.equal(pq.m.evaluate(X, Y), ab(xa, ya))
                assert linalg.equal(pc.m.evaluate(X, Y), ac(xa, ya))
    assert time.perf_counter() - start < 30


def test_criterion_08_pentagon():
    rng = random.Random(SEED)
    R = function_bialgebra(cyclic_group(2))
    mods = small_modules(R, rng)
    for _ in range(20):
        ps = [random_nucleus_pair(R, rng.choice(mods), rng) for _ in range(4)]
        assert verify_pentagon(*ps)
        assert phi_is_morphism(*ps[:3])


def test_criterion_09_twist_laws():
    rng = random.Random(SEED)
    for k in range(20):
        R = function_bialgebra(cyclic_group(2 + k % 2))
        mods = small_modules(R, rng)
        p, q = (random_nucleus_pair(R, rng.choice(mods), rng) for _ in range(2))
        c, d = random_twist(R, rng), random_twist(R, rng)
        assert twist_pair(twist_pair(p, c), d).m == twist_pair(p, c * d).m
        assert twist_pair(tensor_pairs(p, q), c).m == tensor_pairs(twist_pair(p, c), twist_pair(q, c)).m


def test_criterion_10_pentagon_iff_cocycle():
    G = cyclic_group(2)
    R = function_bialgebra(G)
    M = RModule.regular(R)
    for bits in range(256):
        alpha = sign_table(G, QQ, [(bits >> k) & 1 for k in range(8)])
        assert cocycle_pentagon_holds(alpha, M, M, M, M) == cocycle_check(alpha)
    assert sign_table(G, QQ, [0] * 7 + [1]) in enumerate_sign_cocycles(G)


def test_criterion_11_quasi_bialgebra():
    for G in (trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group(3)):
        start = time.perf_counter()
        phi, inv = associator_phi(G)
        assert phi * inv == NlkGElement.one(G, QQ, 3)
        assert quasi_coassoc_check(G)
        assert time.perf_counter() - start < 60


def test_criterion_12_splitting():
    G = cyclic_group(2)
    rep = splitting_hom(sign_table(G, QQ, [0] * 7 + [1]))
    assert rep.splits_inclusion and rep.delta_compatible
    rng = random.Random(SEED)
    while True:
        alpha = sign_table(G, QQ, [rng.randrange(2) for _ in range(8)])
        if not cocycle_check(alpha):
            break
    rep = splitting_hom(alpha)
    assert not rep.delta_compatible
    assert rep.splits_inclusion


def test_criterion_13_bialgebra_multiplicants():
    rng = random.Random(SEED)
    H1 = function_bialgebra(cyclic_group(2))
    H2 = function_bialgebra(cyclic_group(4))
    mat = QQ.zeros((4, 2))
    for b in range(4):
        mat[b, b % 2] = QQ.one
    f = LinearMap(H1.algebra, H2.algebra, mat)
    mods = [RModule.regular(H2)] + [isotypic_module(H2, [g]) for g in range(4)]
    for _ in range(20):
        p, q = (random_multiplicant_pair(H1, H2, f, rng.choice(mods), rng) for _ in range(2))
        assert multiplicant_check(multiplicant_tensor(p, q))
    H = function_bialgebra(cyclic_group(3))
    ident = LinearMap(H.algebra, H.algebra, QQ.eye(3))
    for _ in range(10):
        M = rng.choice([RModule.regular(H)] + [isotypic_module(H, [g]) for g in range(3)])
        x = QQ.vector([rng.choice([-2, -1, 1, 2, 3]) for _ in range(3)])
        mp = MultiplicantPair(H, H, ident, M, gamma_element(H, M, x))
        assert multiplicant_gamma_membership(mp, x)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion_")):
        try:
            fn()
            status = "PASS"
        except AssertionError:
            status, failed = "FAIL", failed + 1
        print(f"{status} {name[len('test_'):]}")
    sys.exit(1 if failed else 0)
