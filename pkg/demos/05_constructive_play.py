"""
Building moves instead of searching for them
============================================

``construct_move`` writes down a move to any smaller Grundy value directly,
with no game-tree search. Here it drives a game on large heaps, where brute
force is out of reach.
"""

from mixsat.formulas import phi, weight_formula
from mixsat.games import weight
from mixsat.mixed_radix import Base
from mixsat.solver import construct_move

base = Base.parse("6,2")
X = (2, 2, 2)
for target in range(phi(X, base)):
    mc = construct_move(X, target, base)
    print(f"{X} -> {mc.resulting}: move {mc.move}, phi {mc.phi_after}, case {mc.case_tag}/{mc.subcase}")

###############################################################################
# A long game: the player to move always goes to value 0 when possible,
# otherwise takes one coin from the first nonempty heap.
base = Base.parse("3,2,5,4")
X = (123456, 98765, 55555)
w = weight_formula(base, len(X)).w
turn = 0
while True:
    v = phi(X, base)
    if sum(1 for x in X if x) == 1 and max(X) == 1:
        print(f"turn {turn}: {X} is terminal, player {turn % 2} loses")
        break
    if v:
        mc = construct_move(X, 0, base)
        assert weight(mc.move) <= w
        X = mc.resulting
    else:
        i = next(i for i, x in enumerate(X) if x and (x > 1 or sum(1 for y in X if y) > 1))
        X = X[:i] + (X[i] - 1,) + X[i + 1:]
    turn += 1
    if turn <= 6 or turn % 5000 == 0:
        print(f"turn {turn}: {X}  phi={phi(X, base)}")
