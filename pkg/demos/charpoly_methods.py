"""Three independent ways to get a characteristic polynomial, and how they line up."""

import time

from arrangeo.arrangement import build_arrangement, catalan, cone, shi
from arrangeo.charpoly import (
    charpoly_deletion_restriction,
    charpoly_finite_field,
    charpoly_mobius,
    valid_primes,
)
from arrangeo.polynomial import factored_form, terao_check


def show(chi):
    exps = terao_check(chi)
    return factored_form(exps) if exps is not None else str(chi)

for wg, label in ((shi(4, 1), "Shi(4, 1)"), (catalan(4, 1), "Catalan(4, 1)")):
    A = cone(build_arrangement(wg))
    t0 = time.perf_counter()
    mob = charpoly_mobius(A)
    t1 = time.perf_counter()
    dr = charpoly_deletion_restriction(A)
    t2 = time.perf_counter()
    print(f"{label}: {show(mob)}")
    print(f"  mobius {t1 - t0:.3f}s, deletion-restriction {t2 - t1:.3f}s, equal: {mob == dr}")
    for q in valid_primes(A, 2):
        print(f"  q={q}: {charpoly_finite_field(A, q)} points off the walls, chi(q)={mob(q)}")

# The finite-field count of the affine Catalan(3, 1) arrangement at q = 13.
print("Catalan(3, 1) at q=13:", charpoly_finite_field(build_arrangement(catalan(3, 1)), 13))
