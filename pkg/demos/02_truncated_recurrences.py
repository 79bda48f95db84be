# # Truncating the pentagonal recurrence
#
# p(n) = p(n-1) + p(n-2) - p(n-5) - p(n-7) + ... . Cutting this after 2m+1
# terms stays exact if each term counts partitions with three residue classes
# mod 3(2m+1)^2 removed. schedule_for(m) builds those terms.

from fibpart import schedule_for, verify_counting
from fibpart.identities import build_tables, residual

for m in (1, 2, 3):
    s = schedule_for(m)
    print(f"m = {m}, modulus {s.modulus}")
    for t in s.terms:
        sign = "+" if t.sign > 0 else "-"
        print(f"   {sign} p(n - {t.shift:>2} | forbid {sorted(t.restriction.forbidden)})")

# Residuals for m = 2 over the first few n. The sum is 0 for every n >= 1,
# including the n < 7 range where some terms vanish, and 1 at n = 0 where
# only the empty partition contributes.

s = schedule_for(2)
tables = build_tables(s, 20)
print([residual(n, s, tables) for n in range(0, 21)])

# A full sweep returns a report.

for m in range(1, 7):
    rep = verify_counting(m, 600)
    print(f"m={m}: passed={rep.passed} n=1..600, residual at 0 = {rep.residual_at_zero}, {rep.elapsed * 1e3:.0f} ms")
