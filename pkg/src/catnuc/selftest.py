"""Oracle suites behind ``catnuc selftest``.

Each suite returns ``(name, passed)`` pairs; suites are independent, so
they can run in worker processes and be reassembled in a fixed order.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from . import linalg, oracles
from .algebra import is_monoid
from .catalog import random_algebra, random_invertible_matrix
from .cocycles import (
    cocycle_check,
    cocycle_pentagon_holds,
    enumerate_sign_cocycles,
    function_bialgebra,
    isotypic_module,
    sign_table,
)
from .fields import GF, QQ
from .groups import cyclic_group, symmetric_group
from .modcat import (
    RModule,
    associativity_constraint,
    phi_is_morphism,
    random_nucleus_pair,
    random_twist,
    tensor_pairs,
    twist_pair,
    verify_pentagon,
)
from .nuclei import nucleus, verify_associator_identity
from .quasi import quasi_coassoc_check, splitting_hom


def suite_nuclei(seed: int, quick: bool) -> list:
    O = oracles.octonions()
    out = [("octonion associator identity", verify_associator_identity(O))]
    for side in "lmr":
        ours = [tuple(r) for r in nucleus(O, side).basis]
        theirs = oracles.sympy_kernel_rref(oracles.oracle_nucleus_rows(3, side))
        out.append((f"octonion nucleus ({side}) matches sympy", ours == theirs and len(ours) == 1))
    rng = random.Random(seed)
    ok = all(verify_associator_identity(random_algebra(rng.randint(1, 4), GF(7), rng)) for _ in range(5 if quick else 20))
    out.append(("associator identity on random GF(7) algebras", ok))
    return out


def suite_monoids(seed: int, quick: bool) -> list:
    counts = [len(oracles.enumerate_monoids(n)) for n in range(1, 4 if quick else 5)]
    expected = [1, 4, 33, 624][: len(counts)]
    out = [("labelled monoid counts", counts == expected)]
    ok = all(is_monoid(t) for n in range(1, 4) for t in oracles.enumerate_monoids(n))
    out.append(("corpus tables pass is_monoid", ok))
    bad = oracles.magmas_failing_one_triple(3)[0][0]
    out.append(("one-triple magma rejected", not is_monoid(bad)))
    return out


def _mods(R, rng):
    mods = [RModule.regular(R)]
    for d in (1, 2):
        labels = [rng.randrange(R.dim) for _ in range(d)]
        mods.append(isotypic_module(R, labels, random_invertible_matrix(d, QQ, rng)))
    return mods


def suite_modcat(seed: int, quick: bool) -> list:
    rng = random.Random(seed)
    out = []
    for n in (2, 3):
        R = function_bialgebra(cyclic_group(n))
        orc = oracles.OperatorOracle(R.algebra, R.delta)
        mods = _mods(R, rng)
        agree = True
        for _ in range(2 if quick else 5):
            M, N, L = (mods[rng.randrange(1, 3)] for _ in range(3))
            p, q = random_nucleus_pair(R, M, rng), random_nucleus_pair(R, N, rng)
            a = orc.nucleus_transformation(p.m.coeffs)
            b = orc.nucleus_transformation(q.m.coeffs)
            ab = orc.tensor_transformation(a, b, M.dim, list(N.action))
            pq = tensor_pairs(p, q)
            c = random_twist(R, rng)
            tw = orc.twist_transformation(a, c.scalars(), list(M.action))
            pc = twist_pair(p, c)
            r = random_nucleus_pair(R, L, rng)
            agree &= linalg.equal(associativity_constraint(p, q, r), orc.constraint(a, list(N.action), list(L.action)))
            for X in mods:
                for Y in mods:
                    xa, ya = list(X.action), list(Y.action)
                    agree &= linalg.equal(pq.m.evaluate(X, Y), ab(xa, ya))
                    agree &= linalg.equal(pc.m.evaluate(X, Y), tw(xa, ya))
        out.append((f"element calculus matches operator oracle over k(Z/{n})", agree))
    R = function_bialgebra(cyclic_group(2))
    mods = _mods(R, rng)
    pent = True
    for _ in range(2 if quick else 5):
        ps = [random_nucleus_pair(R, mods[rng.randrange(1, 3)], rng) for _ in range(4)]
        pent &= verify_pentagon(*ps) and phi_is_morphism(*ps[:3])
    out.append(("pentagon and constraint naturality over k(Z/2)", pent))
    return out


def suite_cocycles(seed: int, quick: bool) -> list:
    G = cyclic_group(2)
    R = function_bialgebra(G)
    reg = RModule.regular(R)
    agree = True
    for bits in range(256):
        alpha = sign_table(G, QQ, [(bits >> k) & 1 for k in range(8)])
        agree &= cocycle_pentagon_holds(alpha, reg, reg, reg, reg) == cocycle_check(alpha)
    out = [("pentagon holds iff cocycle (256 sign tables on Z/2)", agree)]
    found = enumerate_sign_cocycles(G)
    target = sign_table(G, QQ, [0] * 7 + [1])
    out.append(("enumeration contains alpha(g,g,g) = -1", any(a == target for a in found)))
    rep = splitting_hom(target)
    out.append(("splitting of the nontrivial Z/2 cocycle", rep.splits_inclusion and rep.delta_compatible))
    return out


def suite_quasi(seed: int, quick: bool) -> list:
    groups = [cyclic_group(1), cyclic_group(2), cyclic_group(3)] + ([] if quick else [symmetric_group(3)])
    return [(f"quasi-coassociativity for a group of order {G.size}", quasi_coassoc_check(G)) for G in groups]


SUITES = (suite_nuclei, suite_monoids, suite_modcat, suite_cocycles, suite_quasi)


def _run(args):
    suite, seed, quick = args
    return suite(seed, quick)


def run_selftest(seed: int = 0, workers: int = 1, quick: bool = False) -> list:
    jobs = [(s, seed, quick) for s in SUITES]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run, jobs))
    else:
        results = [_run(j) for j in jobs]
    return [item for res in results for item in res]
