"""
Misere Nim versus its 2-saturation
==================================

Two-heap misere Nim (origin removed, one heap per move) next to the same
positions when every move in ``C_ord^2`` is allowed. The grids differ first
at (2, 2): 0 in misere Nim but 3 in the saturation, because (0, 1) becomes
reachable in one move.
"""

from mixsat.formulas import phi
from mixsat.games import MoveSet, PositionSet, grundy_table

pset = PositionSet("misere", 2)
unit = grundy_table((9, 9), pset, MoveSet.unit())
sat = grundy_table((9, 9), pset, MoveSet.ord(2))

print("misere Nim")
print(unit.to_tsv())
print("2-saturation")
print(sat.to_tsv())

###############################################################################
# Cells that differ.
print("differ at", unit.diff(sat)[:6], "...")

###############################################################################
# The saturated table has a closed form, phi.
assert all(sat[X] == phi(X, 2) for X in sat.positions())
print("phi reproduces every saturated cell")
