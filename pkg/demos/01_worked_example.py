# # Restricted partitions that add up like Fibonacci numbers
#
# The partition numbers grow a little slower than a Fibonacci sequence:
# p(n) <= p(n-1) + p(n-2). Forbid a few residue classes mod 27, a different
# set for each of the three terms, and the inequality becomes an equality.

from fibpart import ResidueRestriction, count_restricted_table, count_unrestricted_pentagonal

# Unrestricted values around n = 29: the inequality is strict.

p = count_unrestricted_pentagonal(29)
print("p(27), p(28), p(29) =", p[27], p[28], p[29])
print("p(28) + p(27) - p(29) =", p[28] + p[27] - p[29])

# Now the three restricted counts. Residues are reduced on construction, so
# "27 (mod 27)" and "0 (mod 27)" are the same class.

A = ResidueRestriction(27, {12, 15, 27})
B = ResidueRestriction(27, {6, 21, 27})
C = ResidueRestriction(27, {3, 24, 27})

a = count_restricted_table(A, 29)[29]
b = count_restricted_table(B, 28)[28]
c = count_restricted_table(C, 27)[27]
print(f"p(29 | {A}) = {a}")
print(f"p(28 | {B}) = {b}")
print(f"p(27 | {C}) = {c}")
print("equality holds:", a == b + c)

# The same thing for every n up to 60.

ta, tb, tc = (count_restricted_table(r, 60) for r in (A, B, C))
print("all n in 2..60:", all(ta[n] == tb[n - 1] + tc[n - 2] for n in range(2, 61)))
