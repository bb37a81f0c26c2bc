"""Sign-valued 3-cocycles on Z/2 and the pentagon.

A table alpha: G^3 -> {+1, -1} defines an associativity constraint on
k(Z/2)-modules; the pentagon holds for it exactly when alpha is a cocycle.
All 256 tables are swept.
"""

from catnuc.cocycles import cocycle_check, cocycle_pentagon_holds, enumerate_sign_cocycles, function_bialgebra, sign_table
from catnuc.fields import QQ
from catnuc.groups import cyclic_group
from catnuc.modcat import RModule
from catnuc.quasi import splitting_hom


def main():
    G = cyclic_group(2)
    M = RModule.regular(function_bialgebra(G))
    agree = cocycles = 0
    for bits in range(256):
        alpha = sign_table(G, QQ, [(bits >> k) & 1 for k in range(8)])
        ok = cocycle_check(alpha)
        cocycles += ok
        agree += cocycle_pentagon_holds(alpha, M, M, M, M) == ok
    print(f"{cocycles} cocycles among 256 tables; pentagon agrees on {agree}")

    nontrivial = sign_table(G, QQ, [0] * 7 + [1])
    print("alpha(1,1,1) = -1 enumerated:", nontrivial in enumerate_sign_cocycles(G))
    rep = splitting_hom(nontrivial)
    print("splitting:", "splits inclusion", rep.splits_inclusion, "/ compatible with coproduct", rep.delta_compatible)
    bad = splitting_hom(sign_table(G, QQ, [0, 0, 0, 1, 0, 0, 0, 1]))
    print("non-cocycle splitting:", "splits inclusion", bad.splits_inclusion, "/ compatible", bad.delta_compatible)


if __name__ == "__main__":
    main()
