"""The left nucleus of k(G) as a quasi-bialgebra.

Its coproduct is coassociative only up to conjugation by the associator
Phi; the check below runs over all generators for a few small groups.
"""

import time

from catnuc.fields import QQ
from catnuc.groups import cyclic_group, symmetric_group, trivial_group
from catnuc.quasi import NlkGElement, associator_phi, nl_coproduct, quasi_coassoc_check


def main():
    G = cyclic_group(2)
    u = NlkGElement.u(G, 1, 1)
    print("Delta(u11) =", nl_coproduct(u))
    for name, G in (("1", trivial_group()), ("Z/2", cyclic_group(2)), ("Z/3", cyclic_group(3)), ("S_3", symmetric_group(3))):
        start = time.perf_counter()
        phi, inv = associator_phi(G)
        ok = phi * inv == NlkGElement.one(G, QQ, 3) and quasi_coassoc_check(G)
        print(f"{name}: quasi-coassociative {ok} ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
