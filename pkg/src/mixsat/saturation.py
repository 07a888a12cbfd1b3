"""Checks that a move set realises ``phi`` on misere positions.

The Grundy function of ``Gamma(P-, C)`` is ``phi`` exactly when

* SG1: no option ``Y`` of ``X`` has ``phi(Y) == phi(X)``, and
* SG2: every value below ``phi(X)`` is ``phi`` of some option.

Both are checked per position over a box. Options of a position never leave
the box (moves only decrease coordinates), so the per-position verdict is
exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .exceptions import DomainError
from .formulas import phi, weight_formula
from .games import MoveSet, PositionSet, box, descendants, grundy_table, move_member, weight
from .mixed_radix import Base, _as_base

DEFAULT_LIMIT = 100


@dataclass
class Violation:
    check: str
    x: tuple[int, ...]
    detail: dict

    def to_dict(self):
        return {"x": list(self.x), "detail": self.detail}


@dataclass
class SaturationReport:
    check: str
    base: Base
    bounds: tuple[int, ...]
    violations: list[Violation] = field(default_factory=list)
    count: int = 0
    limit: int = DEFAULT_LIMIT

    def add(self, v: Violation):
        self.count += 1
        if len(self.violations) < self.limit:
            self.violations.append(v)

    @property
    def verdict(self) -> bool:
        return self.count == 0

    @property
    def truncated(self) -> bool:
        return self.count > len(self.violations)

    @property
    def checked_box(self):
        return self.bounds

    @property
    def sg1_violations(self):
        return [(v.x, tuple(v.detail["move"])) for v in self.violations if v.check == "sg1"]

    @property
    def sg2_violations(self):
        return [(v.x, v.detail["target"]) for v in self.violations if v.check == "sg2"]

    def to_dict(self):
        return {
            "check": self.check,
            "base": str(self.base),
            "bounds": list(self.bounds),
            "verdict": self.verdict,
            "violations": [v.to_dict() for v in self.violations],
            "truncated": self.truncated,
        }

    def to_json(self):
        return json.dumps(self.to_dict())


def _moves(X, mset):
    """(Y, C) for every option Y of X in P- under mset."""
    for Y in descendants(X):
        if not any(Y):
            continue
        C = tuple(a - b for a, b in zip(X, Y))
        if mset is not None and move_member(C, mset):
            yield Y, C


def _misere_box(bounds):
    for X in box(bounds):
        if any(X):
            yield X


def check_sg1(bounds: Sequence[int], base, mset: MoveSet | None, limit: int = DEFAULT_LIMIT) -> SaturationReport:
    """``mset=None`` is the empty move set."""
    base = _as_base(base)
    bounds = tuple(bounds)
    report = SaturationReport("sg1", base, bounds, limit=limit)
    for X in _misere_box(bounds):
        v = phi(X, base)
        for Y, C in _moves(X, mset):
            if phi(Y, base) == v:
                report.add(Violation("sg1", X, {"move": list(C), "phi": v}))
    return report


def check_sg2(bounds: Sequence[int], base, mset: MoveSet | None, limit: int = DEFAULT_LIMIT) -> SaturationReport:
    base = _as_base(base)
    bounds = tuple(bounds)
    report = SaturationReport("sg2", base, bounds, limit=limit)
    for X in _misere_box(bounds):
        v = phi(X, base)
        if v == 0:
            continue
        reached = {phi(Y, base) for Y, _ in _moves(X, mset)}
        for target in range(v):
            if target not in reached:
                report.add(Violation("sg2", X, {"target": target, "phi": v}))
    return report


def saturation_report(bounds, pset: PositionSet, mset: MoveSet, base, limit: int = DEFAULT_LIMIT) -> SaturationReport:
    """Compare the Grundy table of ``(pset, mset)`` with ``(pset, C_ord^base)`` cell by cell."""
    base = _as_base(base)
    bounds = tuple(bounds)
    report = SaturationReport("saturation", base, bounds, limit=limit)
    ours = grundy_table(bounds, pset, mset)
    ref = ours if (mset.kind == "ord" and mset.base == base and mset.max_weight is None) \
        else grundy_table(bounds, pset, MoveSet.ord(base))
    for X in ours.diff(ref):
        report.add(Violation("saturation", X, {"value": ours[X], "saturated": ref[X]}))
    return report


def is_saturation(bounds, pset: PositionSet, mset: MoveSet, base) -> bool:
    return saturation_report(bounds, pset, mset, base, limit=0).verdict


def weight_witness(base, k: int) -> tuple[tuple[int, ...], int]:
    """A position whose value-0 descendants are all at least ``w`` coordinates away.

    Returns ``(X, 0)`` with ``phi(X) > 0``.
    """
    base = _as_base(base)
    if k < 2:
        raise DomainError("a weight witness needs k >= 2 (for k = 1 every move set suffices)")
    rep = weight_formula(base, k)
    w, M = rep.w, rep.achieving_level
    if M > 0 or base[0] < 2 * k:
        n = w + (1 if M == 0 else 0)
        p = base.radix_product(M)
        X = (p,) * n + (0,) * (k - n)
    else:
        X = (2,) * k
    return X, 0


def min_descendant_weight(X: Sequence[int], target: int, base) -> int | None:
    """Brute force: least ``wt(X - Y)`` over descendants ``Y`` in P- with ``phi(Y) == target``."""
    best = None
    for Y in descendants(X):
        if any(Y) and phi(Y, base) == target:
            w = weight(tuple(a - b for a, b in zip(X, Y)))
            best = w if best is None else min(best, w)
    return best
