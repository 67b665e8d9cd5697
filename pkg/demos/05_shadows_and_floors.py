"""
Shadows, the cascade bound, and exhaustive floor checks
=======================================================

The lower shadow of a k-uniform family is everything reachable by
deleting one element.  Writing m in the binomial cascade at k gives a
sharp lower bound for the shadow size, and iterating it bounds deeper
shadows too.  All bounds here are exact integers.
"""

from latticework.core import SetFamily, binomial, layer_masks
from latticework.shadow import (
    kk_cascade,
    kk_shadow_bound,
    lower_shadow,
    technical_bound_check,
)

# the cascade representation of m = 17 at k = 3:
# 17 = C(5,3) + C(4,2) + C(1,1), with strictly decreasing tops
rep = kk_cascade(17, 3)
print("cascade of 17 at k=3:", rep.terms, "->",
      sum(binomial(a, b) for a, b in rep.terms))

# shadow floor for 17 three-sets, one and two steps down
print("one-step shadow floor: ", kk_shadow_bound(17, 3, 1))
print("two-step shadow floor: ", kk_shadow_bound(17, 3, 2))

# exhaustive confirmation on a whole layer: every subfamily of layer 2
# of [5] respects the floor at both depths
layer = layer_masks(5, 2)
worst_gap = None
for pick in range(1, 1 << len(layer)):
    fam = SetFamily.from_masks(5, [m for i, m in enumerate(layer) if (pick >> i) & 1])
    shadow = lower_shadow(fam)
    floor = kk_shadow_bound(len(fam), 2, 1)
    assert len(shadow) >= floor
    gap = len(shadow) - floor
    if worst_gap is None or gap < worst_gap:
        worst_gap = gap
print("all", (1 << len(layer)) - 1, "nonempty subfamilies pass;",
      "smallest slack over the floor:", worst_gap)

# a tight instance: the first C(4,2) = 6 two-sets in colex order
tight = SetFamily.from_masks(5, sorted(layer)[:6])
print("colex-initial family shadow:", len(lower_shadow(tight)),
      "floor:", kk_shadow_bound(6, 2, 1))

# k sets of size >= k have a down-closure of at least 2^(k+1) - 2 lattice
# points; with k+1 sets the floor rises to 2^(k+1) - 1
fam = SetFamily.from_sets(6, [(1, 2), (3, 4)])
print("k-mode floor for two disjoint pairs:", technical_bound_check(fam, "k"))
fam = SetFamily.from_sets(6, [(1, 2), (3, 4), (5, 6)])
print("k+1-mode floor for three disjoint pairs:",
      technical_bound_check(fam, "k_plus_one"))
