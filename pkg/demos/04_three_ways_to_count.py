# # Three ways to count restricted partitions, plus brute force
#
# count_restricted_table runs a knapsack table, restricted_gf divides a
# product of forbidden-class factors by the Euler product, and
# enumerate_restricted walks every partition for small n.

import random

from fibpart import (
    ResidueRestriction,
    count_restricted_table,
    count_unrestricted_pentagonal,
    enumerate_restricted,
    restricted_gf,
)
from fibpart.partitions import iter_partitions

r = ResidueRestriction(27, {0, 3, 24})
print("partitions of 4 avoiding 3 mod 27:", list(iter_partitions(4, r)))

rng = random.Random(0)
mismatches = 0
for _ in range(30):
    M = rng.randint(2, 30)
    r = ResidueRestriction(M, rng.sample(range(M), rng.randint(0, M - 1)))
    dp = count_restricted_table(r, 150)
    gf = restricted_gf(r, 150)
    mismatches += dp.counts != gf.coeffs
    mismatches += any(enumerate_restricted(n, r) != dp[n] for n in range(0, 31))
print("mismatches:", mismatches)

# Coefficients are Python ints, so large n is exact.

p = count_unrestricted_pentagonal(2000)
print("p(2000) =", p[2000])
print("digits:", len(str(p[2000])))
