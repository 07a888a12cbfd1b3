"""
How heavy must moves be?
========================

``weight_formula`` gives the least number of heaps a move must be allowed to
touch for the misere game to have Grundy function ``phi``. The witness
position shows why fewer is not enough: every route to value 0 moves at
least ``w`` heaps.
"""

from mixsat.formulas import phi, weight_formula
from mixsat.games import MoveSet
from mixsat.mixed_radix import Base
from mixsat.saturation import check_sg2, min_descendant_weight, weight_witness

print("constant bases, rows b = 2..6, columns k = 1..6")
for b in range(2, 7):
    print(b, [weight_formula(b, k).w for k in range(1, 7)])

###############################################################################
# Irregular heads change the answer.
for text in ("6,2", "5,2", "4,2", "2,3", "9,2,3"):
    base = Base.parse(text)
    for k in (2, 3, 4):
        rep = weight_formula(base, k)
        X, target = weight_witness(base, k)
        print(f"base {text:6} k={k}: w={rep.w} ({rep.case_tag}); witness {X} phi={phi(X, base)}, "
              f"lightest move to 0 touches {min_descendant_weight(X, target, base)} heaps")

###############################################################################
# Capping moves at w keeps every target reachable; capping at w - 1 does not.
base = Base.parse("6,2")
for cap in (2, 3):
    r = check_sg2((5, 5, 5), base, MoveSet.ord(base, cap))
    print(f"cap {cap}: SG2 holds = {r.verdict}, missing targets = {r.count}")
