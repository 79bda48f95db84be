# # The identities behind the counts, checked as truncated series
#
# Everything here is an exact integer coefficient vector truncated at some
# order; no numeric q is ever plugged in.

from fibpart import euler_product, pentagonal_series, verify_lemma, verify_product_identity
from fibpart.identities import product_identity_sides, schedule_for
from fibpart.series import invert_unit, mul, render

# Euler's pentagonal number theorem: the infinite product and the sparse
# alternating sum agree coefficient by coefficient.

print(render(euler_product(40), max_terms=None))
print(euler_product(2000) == pentagonal_series(2000))

# Jacobi's triple product in the form used here, for each admissible i.

for k in range(1, 5):
    rep = verify_lemma(k, 300)
    print(f"k={k}: i in {rep.details['checked_i']} all equal: {rep.passed}")

# The product identity: prod (1 - q^n) written as a signed, shifted sum of
# 2m+1 triple products with step 3(2m+1)^2.

left, right = product_identity_sides(schedule_for(2), 120)
print(render(right, max_terms=8))
print("m=2 sides equal:", left == right)

# Dividing both sides by prod (1 - q^n) gives the counting identity: each
# triple product over prod (1 - q^n) is a restricted partition generating
# function, and the left side becomes the series 1.

inv = invert_unit(left)
print("left / left =", render(mul(left, inv)))

for m in range(1, 6):
    print(f"m={m}", verify_product_identity(m, 800).passed)
