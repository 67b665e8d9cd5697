"""
Antichains, the Lubell function, and chains that meet a family
==============================================================

The Lubell value of a family is the expected number of members a
uniformly random maximal chain walks through, Sum 1/C(n,|F|).  For an
antichain it is at most 1, which is how Sperner's bound falls out.
Everything here is exact rational arithmetic.
"""

import random
from fractions import Fraction

from latticework import SetFamily, is_antichain, layer_masks
from latticework.lubell import (
    average_meet_count,
    lubell,
    lubell_by_permutations,
    meet_profile,
)
from latticework.sampling import random_antichain

n = 5

# a full layer is the canonical tight antichain
middle = SetFamily.from_masks(n, layer_masks(n, n // 2))
print("middle layer of [5]:", len(middle), "sets, Lubell =", lubell(middle))

# random antichains never exceed 1
rng = random.Random(0)
worst = Fraction(0)
for _ in range(200):
    fam = random_antichain(rng, n, attempts=12)
    assert is_antichain(fam) and lubell(fam) <= 1
    worst = max(worst, lubell(fam))
print("largest Lubell over 200 random antichains:", worst)

# the closed form agrees with brute-force enumeration of all n! chains
fam = SetFamily.from_sets(4, [(1,), (1, 2), (3, 4)])
print("closed form:        ", lubell(fam))
print("permutation count:  ", lubell_by_permutations(fam))

# meet_profile counts chains by how many members they hit
prof = meet_profile(fam)
print("chains hitting 0,1,2,... members:", prof.counts)
print("chains that meet the family:", prof.meeting_count, "of", sum(prof.counts))

# conditioned on meeting the family at all, the average hit count is
# weighted_total / meeting_count, never below the Lubell value
print("average hits per meeting chain:", average_meet_count(fam), ">=", lubell(fam))
