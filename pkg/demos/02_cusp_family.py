"""
Cyclic covers branched over a cusp
==================================

The degree-b cover of the plane branched along b{x=0} + {x^a + z^c = 0}
is the surface y^b = x^b (x^a + z^c).  Over a general point of the z-axis it
has gcd(b, b) = b local branches, permuted by a shift of c around the
origin.

Keeping the origin, the branches merge into a single one there and the
weight-zero part vanishes.  Deleting the origin leaves gcd(b, c) orbits,
and W0H1 has dimension gcd(b, c) - 1.
"""

from math import gcd

from w0h1.covers import (
    BranchGermParam,
    Component,
    CoveringSpec,
    SpecialPoint,
    compile,
    intersection_multiplicity_oracle,
)
from w0h1.weights import full_pipeline


def cusp_cover(a, b, c, removed):
    # D1 = {x=0} meets D2 = {x^a + z^c = 0} with multiplicity c, read off
    # from the order of vanishing along the parametrization t -> (0, t)
    d1_d2 = intersection_multiplicity_oracle(BranchGermParam((0,), (0, 1)),
                                             {(a, 0): 1, (0, c): 1})
    return CoveringSpec(
        degree=b,
        components=(Component("D1", b), Component("D2", 1)),
        special_points=(SpecialPoint("0", (("D1", 0), ("D2", 0)), removed),),
        intersections={("0", "D1", 0, "D2"): d1_d2, ("0", "D2", 0, "D1"): c},
    )


# Look at the compiled strata for one case
d = compile(cusp_cover(3, 6, 4, removed=False))
for s in d.strata:
    print(f"{s.id:<10} branches={s.branches} closed={s.closed} "
          f"shifts={[g(0) for g in s.monodromy]}")

print()
print(" b  c   origin kept   origin removed   gcd-1")
for b in range(2, 8):
    for c in (2, 3, 4, 6):
        kept = full_pipeline(compile(cusp_cover(3, b, c, False))).dim_w0_h1
        gone = full_pipeline(compile(cusp_cover(3, b, c, True))).dim_w0_h1
        print(f"{b:>2} {c:>2}   {kept:>11}   {gone:>14}   {gcd(b, c) - 1:>5}")
