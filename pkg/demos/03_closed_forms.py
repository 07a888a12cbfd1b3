"""
Closed forms against brute force
================================

Brute-force mex values for several games compared with their closed forms:

* saturated Nim: the digitwise sum ``sigma``
* saturated Welter's game: ``welter_sg``
* saturated misere Nim: ``phi``
"""

import time

from mixsat.formulas import phi, sigma, welter_sg
from mixsat.games import MoveSet, PositionSet, grundy_table
from mixsat.mixed_radix import Base

bases = [Base.parse(b) for b in ("2", "3", "3,2,5,4", "6,2", "5,2")]

for base in bases:
    for bounds in [(12, 12), (6, 6, 6)]:
        k = len(bounds)
        t0 = time.perf_counter()
        nim = grundy_table(bounds, PositionSet("all", k), MoveSet.ord(base))
        mis = grundy_table(bounds, PositionSet("misere", k), MoveSet.ord(base))
        bad_nim = sum(nim[X] != sigma(X, base) for X in nim.positions())
        bad_mis = sum(mis[X] != phi(X, base) for X in mis.positions())
        print(f"base {str(base):8} box {bounds}: sigma mismatches {bad_nim}, "
              f"phi mismatches {bad_mis} ({time.perf_counter() - t0:.2f}s)")

###############################################################################
# Welter's game with unit moves is already 2-saturated.
for b, mset in [(2, MoveSet.unit()), (3, MoveSet.ord(3))]:
    t = grundy_table((8, 8, 8), PositionSet("welter", 3), mset)
    bad = sum(t[X] != welter_sg(X, b) for X in t.positions())
    print(f"welter b={b} {mset.kind}: mismatches {bad}")

###############################################################################
# Misere Nim itself has no closed form; its table differs from the saturation.
a = grundy_table((9, 9), PositionSet("misere", 2), MoveSet.unit())
s = grundy_table((9, 9), PositionSet("misere", 2), MoveSet.ord(2))
print("misere Nim is 2-saturated:", a == s)
