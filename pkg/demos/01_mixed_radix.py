"""
Mixed-radix digits and carry-free arithmetic
============================================

A base is a sequence of radices. ``"3,2,5,4"`` means 3, 2, 5, 4, 4, 4, ...
Digits are little-endian, and addition is done digit by digit without carries.
"""

from mixsat.mixed_radix import Base, add, all_ones, ord, sub, to_digits

###############################################################################
# Digits. The place values are 1, 3, 6, 30, 120, ...
base = Base.parse("3,2,5,4")
print([base.radix_product(L) for L in range(5)])
print("54 ->", to_digits(54, base), " ord =", ord(54, base))

###############################################################################
# Digitwise sums. In base (3, 2, 5, ...) the numbers 16 and 27 are [1,1,2] and
# [0,1,4], so their sum is [1,0,1] = 7.
b = Base.parse("3,2,5")
print(to_digits(16, b), "(+)", to_digits(27, b), "=", to_digits(add(16, 27, b), b), "=", add(16, 27, b))

###############################################################################
# Each level is its own cyclic group, so (+) and (-) are inverses.
print(sub(add(16, 27, b), 27, b))

###############################################################################
# beta^(M+1) - 1 has every digit at its maximum up to level M.
for M in range(4):
    d = all_ones(M, base)
    print(M, d, int(d))

###############################################################################
# In base 2 the digitwise sum is XOR.
print(add(13, 7, 2), 13 ^ 7)
