"""Multiplicants of linear maps and of maps of monoids.

The left multiplicant of f collects the a with f(ab) = f(a)f(b) for every b.
For the trace on 2x2 matrices nothing survives; for the map picking the top
left entry, the lower triangular matrices do.
"""

from catnuc.algebra import FiniteMonoid, LinearMap
from catnuc.catalog import function_algebra, matrix_algebra
from catnuc.fields import QQ
from catnuc.groups import trivial_group
from catnuc.multiplicants import MonoidMap, monoid_multiplicant, multiplicant, multiplicant_pullback


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def show(label, f):
    for side in "lr":
        S = multiplicant(f, side)
        print(f"  {label} M_{side}: dim {S.dim} {[fmt(v) for v in S.basis]}")


def main():
    M2, k = matrix_algebra(2), function_algebra(trivial_group())
    print("maps M_2(Q) -> Q, basis e11 e12 e21 e22")
    show("trace", LinearMap(M2, k, QQ.array([[1, 0, 0, 1]])))
    show("corner", LinearMap(M2, k, QQ.array([[1, 0, 0, 0]])))

    lz = FiniteMonoid.from_table(((0, 0, 0), (0, 1, 2), (0, 2, 2)))
    f = MonoidMap(lz, lz, (0, 0, 1))
    print("monoid map", f.images)
    for side in "lr":
        print(f"  M_{side} =", monoid_multiplicant(f, side).elements)
    pb = multiplicant_pullback(f, f)
    print("pullback of M_l(f) and M_l(f):", len(pb.pairs), "pairs;",
          "lands in M_l(ff):", pb.lands_in_composite, "; multiplicative:", pb.projection_multiplicative)


if __name__ == "__main__":
    main()
