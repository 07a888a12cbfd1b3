"""Subtraction games on ``N^k`` and the brute-force Sprague-Grundy oracle.

A game is a position set together with a move set. Moves subtract a
nonzero vector ``C`` from the position. Options are found by scanning every
descendant ``Y <= X`` and keeping those with ``X - Y`` in the move set, which
is exact because move sets such as ``C_ord`` are infinite but every option
of ``X`` is a descendant of ``X``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .exceptions import DomainError
from .mixed_radix import INF, Base, _as_base, mord, ord

ABSENT = -1

Position = tuple[int, ...]


def weight(C: Sequence[int]) -> int:
    """Hamming weight: number of nonzero components."""
    return sum(1 for c in C if c)


@dataclass(frozen=True)
class PositionSet:
    """``all`` is N^k, ``misere`` drops the origin, ``welter`` wants distinct coordinates."""

    kind: str
    k: int

    KINDS = ("all", "misere", "welter")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown position set {self.kind!r}")
        if self.k < 1:
            raise ValueError("k must be >= 1")

    def __contains__(self, X) -> bool:
        if len(X) != self.k or any(x < 0 for x in X):
            return False
        if self.kind == "misere":
            return any(X)
        if self.kind == "welter":
            return len(set(X)) == len(X)
        return True


@dataclass(frozen=True)
class MoveSet:
    """Unit moves (Nim) or ``C_ord^beta``, optionally capped at ``max_weight``."""

    kind: str
    base: Base | None = None
    max_weight: int | None = None

    KINDS = ("unit", "ord")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown move set {self.kind!r}")
        if self.kind == "ord":
            if self.base is None:
                raise ValueError("ord move set needs a base")
            object.__setattr__(self, "base", _as_base(self.base))

    @classmethod
    def unit(cls) -> MoveSet:
        return cls("unit")

    @classmethod
    def ord(cls, base, max_weight: int | None = None) -> MoveSet:
        return cls("ord", _as_base(base), max_weight)

    def __contains__(self, C) -> bool:
        return move_member(C, self)


def move_member(C: Sequence[int], spec: MoveSet) -> bool:
    w = weight(C)
    if w == 0 or any(c < 0 for c in C):
        return False
    if spec.max_weight is not None and w > spec.max_weight:
        return False
    if spec.kind == "unit":
        return w == 1
    if w == 1:
        return True
    return ord(sum(C), spec.base) == mord(C, spec.base)


def descendants(X: Sequence[int]) -> Iterator[Position]:
    """Every ``Y <= X`` componentwise, ``Y != X``, in lexicographic order."""
    X = tuple(X)
    for Y in itertools.product(*(range(x + 1) for x in X)):
        if Y != X:
            yield Y


def options(X: Sequence[int], pset: PositionSet, mset: MoveSet) -> list[Position]:
    X = tuple(X)
    if X not in pset:
        raise DomainError(f"{X} is not in the {pset.kind} position set")
    out = []
    for Y in descendants(X):
        if Y in pset and move_member(tuple(a - b for a, b in zip(X, Y)), mset):
            out.append(Y)
    return out


def mex(values) -> int:
    s = set(values)
    n = 0
    while n in s:
        n += 1
    return n


class GrundyOracle:
    """Memoized mex recursion for one game. Each instance owns its memo."""

    def __init__(self, pset: PositionSet, mset: MoveSet):
        self.pset = pset
        self.mset = mset
        self.memo: dict[Position, int] = {}

    def __call__(self, X: Sequence[int]) -> int:
        X = tuple(X)
        if X in self.memo:
            return self.memo[X]
        if X not in self.pset:
            raise DomainError(f"{X} is not in the {self.pset.kind} position set")
        # Iterative post-order so deep single heaps don't hit the recursion limit.
        stack = [X]
        expanded: dict[Position, list[Position]] = {}
        while stack:
            top = stack[-1]
            if top in self.memo:
                stack.pop()
                continue
            if top not in expanded:
                expanded[top] = options(top, self.pset, self.mset)
                missing = [Y for Y in expanded[top] if Y not in self.memo]
                if missing:
                    stack.extend(missing)
                    continue
            self.memo[top] = mex(self.memo[Y] for Y in expanded.pop(top))
            stack.pop()
        return self.memo[X]


def grundy_bruteforce(X: Sequence[int], pset: PositionSet, mset: MoveSet,
                      oracle: GrundyOracle | None = None) -> int:
    if oracle is None:
        oracle = GrundyOracle(pset, mset)
    return oracle(X)


@dataclass(eq=False)
class GrundyTable:
    """Grundy values over the box ``0 <= x^i < bounds[i]``; ``ABSENT`` outside the position set."""

    bounds: tuple[int, ...]
    values: np.ndarray
    pset: PositionSet
    mset: MoveSet
    game: str = ""
    meta: dict = field(default_factory=dict)

    def __getitem__(self, X) -> int | None:
        v = int(self.values[tuple(X)])
        return None if v == ABSENT else v

    def __eq__(self, other):
        if not isinstance(other, GrundyTable):
            return NotImplemented
        return self.bounds == other.bounds and np.array_equal(self.values, other.values)

    def positions(self) -> Iterator[Position]:
        for X in itertools.product(*(range(b) for b in self.bounds)):
            if self.values[X] != ABSENT:
                yield X

    def diff(self, other: GrundyTable) -> list[Position]:
        """Cells where the two tables disagree, lexicographic."""
        idx = np.argwhere(self.values != other.values)
        return [tuple(int(i) for i in row) for row in idx]

    def to_tsv(self) -> str:
        def cell(v):
            return "-" if v == ABSENT else str(int(v))

        if len(self.bounds) == 1:
            return "\t".join(cell(v) for v in self.values) + "\n"
        if len(self.bounds) != 2:
            raise ValueError("TSV export needs k <= 2")
        return "".join("\t".join(cell(v) for v in row) + "\n" for row in self.values)

    def to_dict(self) -> dict:
        base = self.mset.base if self.mset.base is not None else None
        return {
            "bounds": list(self.bounds),
            "base": None if base is None else str(base),
            "game": self.game,
            "values": [int(v) for v in self.values.ravel()],
            "absent": ABSENT,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def grundy_table(bounds: Sequence[int], pset: PositionSet, mset: MoveSet, game: str = "") -> GrundyTable:
    bounds = tuple(int(b) for b in bounds)
    if len(bounds) != pset.k:
        raise ValueError(f"bounds {bounds} do not match k={pset.k}")
    if any(b <= 0 for b in bounds):
        raise ValueError("bounds must be positive")
    values = np.full(bounds, ABSENT, dtype=np.int64)
    # Lexicographic order visits every option before the position itself.
    for X in itertools.product(*(range(b) for b in bounds)):
        if X not in pset:
            continue
        seen = set()
        for Y in descendants(X):
            v = values[Y]
            if v != ABSENT and move_member(tuple(a - b for a, b in zip(X, Y)), mset):
                seen.add(int(v))
        values[X] = mex(seen)
    return GrundyTable(bounds, values, pset, mset, game)


def box(bounds: Sequence[int]) -> Iterator[Position]:
    return itertools.product(*(range(b) for b in bounds))


__all__ = [
    "ABSENT", "INF", "GrundyOracle", "GrundyTable", "MoveSet", "PositionSet", "box",
    "descendants", "grundy_bruteforce", "grundy_table", "mex", "mord", "move_member",
    "options", "weight",
]
