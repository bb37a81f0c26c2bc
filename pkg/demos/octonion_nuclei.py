"""Nuclei of the octonions and of some associative algebras.

The octonions are alternative but not associative, and no element outside
the scalars associates with everything: all three nuclei are spanned by 1.
"""

from catnuc.algebra import associator
from catnuc.catalog import function_algebra, matrix_algebra
from catnuc.fields import QQ
from catnuc.groups import cyclic_group
from catnuc.nuclei import nucleus, verify_associator_identity
from catnuc.oracles import octonions


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def basis(i, n=8):
    return QQ.vector([int(j == i) for j in range(n)])


def main():
    O = octonions()
    print("octonions: dim", O.dim)
    print("  (e1, e2, e4) =", fmt(associator(O, basis(1), basis(2), basis(4))))
    print("  associator identity holds:", verify_associator_identity(O))
    for side in "lmr":
        N = nucleus(O, side)
        print(f"  N_{side}: dim {N.dim}, basis {[fmt(v) for v in N.basis]}")

    for name, A in (("M_2(Q)", matrix_algebra(2)), ("k(Z/4)", function_algebra(cyclic_group(4)))):
        dims = [nucleus(A, side).dim for side in "lmr"]
        print(f"{name}: dim {A.dim}, nuclei dims {dims}")


if __name__ == "__main__":
    main()
