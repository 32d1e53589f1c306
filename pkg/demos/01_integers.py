# Differentiating integers by a prime
# ===================================
#
# delta_p(n) = (n - n^p) / p is always an integer (Fermat's little theorem).
# This script prints a small value table and checks a few of its patterns.

from fractions import Fraction

from pderiv import delta_int, delta_rat, ord_p, quotient_rule_rhs

for n in range(-4, 7):
    print(f"{n:>3}", *(f"{delta_int(p, n):>7}" for p in (2, 3, 5)))

# 0 and 1 are the only "constants" for p = 2; -1 joins them for odd p.
print([n for n in range(-10, 11) if delta_int(2, n) == 0])
print([n for n in range(-10, 11) if delta_int(3, n) == 0])

# delta_2 gives the negatives of the triangular numbers.
print([delta_int(2, n) for n in range(1, 8)])

# Multiples of p lose exactly one factor of p.
for n in (12, 24, 48, -40):
    print(n, ord_p(2, n), "->", delta_int(2, n), ord_p(2, delta_int(2, n)))

# Rationals: delta_p(m/n) agrees with the quotient-rule formula.
print(delta_rat(2, Fraction(1, 2)), quotient_rule_rhs(2, 1, 2))
print(delta_int(13, 2))
