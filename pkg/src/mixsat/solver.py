"""Constructive moves for beta-saturations of misere Nim.

``construct_move(X, target, base)`` returns a move ``C`` in ``C_ord^beta``
with weight at most ``weight_formula(base, k).w`` such that
``phi(X - C) == target``, for any ``0 <= target < phi(X)``. The construction
splits on where the lowest nonzero digit of ``X`` sits relative to the
highest digit at which ``target`` and ``phi(X)`` differ:

* above it, a single coordinate is rewritten by the solution formula;
* otherwise one digit column is lowered (``build_u_claim``) and the first
  coordinate is re-solved so the value comes out right.

Every result is checked against its postconditions before it is returned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .exceptions import DomainError, NoSuchMoveError
from .formulas import phi, weight_formula
from .games import GrundyOracle, MoveSet, PositionSet, move_member, options, weight
from .mixed_radix import _as_base, add_all, all_ones_int, digit, digit_list, mord, ord_succ, sub


def solution_formula(X: Sequence[int], target: int, i: int, base) -> tuple[int, tuple[int, ...]]:
    """Replace coordinate ``i`` of ``X`` so that ``phi`` becomes ``target``.

    Returns ``(M_i, Y_i)`` where ``M_i = mord(Y_i)``. The new coordinate may be
    larger than the old one.
    """
    base = _as_base(base)
    others = [x for h, x in enumerate(X) if h != i]
    M = min(ord_succ(target, base), mord(others, base))
    y = sub(target, add_all([all_ones_int(M, base), *others], base), base)
    Y = tuple(X[:i]) + (y,) + tuple(X[i + 1:])
    return M, Y


def _deduct(x, amount, order):
    """Greedy ``t`` with ``0 <= t <= x`` and ``sum(t) == amount``, filling ``order`` in turn."""
    t = [0] * len(x)
    rest = amount
    for i in order:
        t[i] = min(x[i], rest)
        rest -= t[i]
    if rest:
        raise AssertionError(f"cannot deduct {amount} from {x}")
    return t


def lemma_u(x_R: Sequence[int], target_digit: int, base, R: int, j: int) -> list[int]:
    """Lower the digit column ``x_R`` to ``u`` with

    1. ``u[0] (+) ... (+) u[k-1] == target_digit`` (mod ``beta_R``),
    2. ``0 <= x_R[i] - u[i] <= x_R[j] - u[j]`` for all ``i``,
    3. ``sum(x_R - u) <= beta_R - 1``.
    """
    base = _as_base(base)
    beta = base[R]
    x = list(x_R)
    if any(not 0 <= d < beta for d in x):
        raise DomainError(f"digit column {x} out of range for radix {beta}")
    if any(x[j] < d for d in x):
        raise DomainError(f"x_R[{j}] = {x[j]} is not a maximal entry of {x}")
    if not 0 <= target_digit <= sum(x) or target_digit >= beta:
        raise DomainError(f"target digit {target_digit} not reachable from {x}")
    d = (sum(x) - target_digit) % beta
    t = _deduct(x, d, [j] + [i for i in range(len(x)) if i != j])
    return [a - b for a, b in zip(x, t)]


def build_u_claim(X: Sequence[int], target: int, D: int, M_X: int, M_Y: int, base) -> tuple[list[int], str]:
    """New digit column at level ``D`` for the low-mord case.

    ``X`` must already be ordered so its digits at ``D`` are non-increasing.
    Returns ``(u, subcase)``; ``u`` is asserted to satisfy

    * C1: ``(+) u == target_D (+) [D <= M_Y]``
    * C2: ``0 <= x_D[i] - u[i] <= x_D[0] - u[0]``
    * C3: ``u[0] < x_D[0]`` unless ``M_X < D == M_Y``
    * C4: ``wt(x_D - u) <= w``
    """
    base = _as_base(base)
    k = len(X)
    beta = base[D]
    w = weight_formula(base, k).w
    xD = [digit(x, D, base) for x in X]
    if any(a < b for a, b in zip(xD, xD[1:])):
        raise DomainError(f"digits at level {D} must be non-increasing, got {xD}")
    if M_X > D:
        raise DomainError("build_u_claim needs mord(X) <= D")
    below_y = 1 if D <= M_Y else 0
    below_x = 1 if D <= M_X else 0
    c1 = (digit(target, D, base) + below_y) % beta

    u = lemma_u(xD, c1, base, D, 0)
    subcase = "D>0:u" if D > 0 else "D=0:u"
    if D > 0 and u == xD:
        if below_y == 1 and below_x == 0:
            subcase = "D>0:u=x_D"
        else:
            # Take a full radix off the column instead; the digit sum is unchanged.
            t = _deduct(xD, beta, range(k))
            u = [a - b for a, b in zip(xD, t)]
            subcase = "D>0:u_tilde"
    elif D == 0:
        small = 1 if beta < 2 * k else 0
        if min(beta - 1, k - small) == k - 1 < beta - 1 and xD[-1] >= 1:
            # Keep the last coordinate fixed so at most k - 1 coordinates move.
            c = (digit(target, 0, base) + 1 - xD[-1]) % beta
            u = lemma_u(xD[:-1], c, base, 0, 0) + [xD[-1]]
            subcase = "D=0:u_tilde"

    diff = [a - b for a, b in zip(xD, u)]
    assert sum(u) % beta == c1, ("C1", u, c1)
    assert all(0 <= d <= diff[0] for d in diff), ("C2", xD, u)
    assert u[0] < xD[0] or (M_X < D == M_Y), ("C3", xD, u)
    assert weight(diff) <= w, ("C4", diff, w)
    return u, subcase


@dataclass(frozen=True)
class MoveConstruction:
    move: tuple[int, ...]
    resulting: tuple[int, ...]
    case_tag: str  # "high_mord" or "low_mord"
    subcase: str
    phi_after: int

    @property
    def weight(self) -> int:
        return weight(self.move)

    def to_dict(self):
        return {
            "move": list(self.move),
            "resulting": list(self.resulting),
            "case": self.case_tag,
            "weight": self.weight,
            "phi_after": self.phi_after,
        }

    def to_json(self):
        return json.dumps(self.to_dict())


def _highest_diff(a: int, b: int, base) -> int:
    n = max(base.width(a), base.width(b))
    da, db = digit_list(a, base, n), digit_list(b, base, n)
    return max(L for L in range(n) if da[L] != db[L])


def construct_move(X: Sequence[int], target: int, base) -> MoveConstruction:
    base = _as_base(base)
    X = tuple(int(x) for x in X)
    k = len(X)
    if k == 0 or any(x < 0 for x in X) or not any(X):
        raise DomainError(f"{X} is not a misere position")
    value = phi(X, base)
    if target < 0:
        raise ValueError("target must be nonnegative")
    if target >= value:
        raise NoSuchMoveError(f"no such option (SG1): target {target} >= phi(X) = {value}")

    M_X = mord(X, base)
    D = _highest_diff(value, target, base)

    if M_X > D:
        i0 = next(i for i, x in enumerate(X) if digit(x, M_X, base))
        _, Y = solution_formula(X, target, i0, base)
        case, subcase = "high_mord", f"coordinate {i0}"
    else:
        perm = sorted(range(k), key=lambda i: -digit(X[i], D, base))
        Xp = [X[i] for i in perm]
        M_Y = min(ord_succ(target, base), mord(Xp[1:], base))
        u, subcase = build_u_claim(Xp, target, D, M_X, M_Y, base)
        p = base.radix_product(D)
        Yp = [Xp[0]] + [x - (digit(x, D, base) - ui) * p for x, ui in zip(Xp[1:], u[1:])]
        M_Y2, Yp = solution_formula(Yp, target, 0, base)
        assert M_Y2 == M_Y, (M_Y, M_Y2)
        Y = [0] * k
        for slot, i in enumerate(perm):
            Y[i] = Yp[slot]
        Y = tuple(Y)
        case = "low_mord"

    C = tuple(a - b for a, b in zip(X, Y))
    w = weight_formula(base, k).w
    assert all(c >= 0 for c in C) and any(C) and any(Y), (X, target, C)
    assert move_member(C, MoveSet.ord(base, w)), (X, target, C)
    after = phi(Y, base)
    assert after == target, (X, target, Y, after)
    return MoveConstruction(C, Y, case, subcase, after)


@dataclass(frozen=True)
class BestMove:
    move: tuple[int, ...]
    resulting: tuple[int, ...]
    value: int  # Grundy value of the position moved from
    losing: bool


def _closed_form_applies(base, legal: MoveSet, pset: PositionSet, k: int) -> bool:
    if pset.kind != "misere" or legal.kind != "ord" or legal.base != base:
        return False
    return legal.max_weight is None or legal.max_weight >= weight_formula(base, k).w


def best_move(X: Sequence[int], base, legal: MoveSet, pset: PositionSet | None = None,
              oracle: GrundyOracle | None = None) -> BestMove | None:
    """Winning move if there is one, otherwise a deterministic fallback flagged ``losing``.

    Returns ``None`` at a terminal position. Saturated misere games use the
    constructive solver; anything else goes through the brute-force oracle.
    """
    X = tuple(X)
    base = _as_base(base)
    if pset is None:
        pset = PositionSet("misere", len(X))
    opts = options(X, pset, legal)
    if not opts:
        return None

    if _closed_form_applies(base, legal, pset, len(X)):
        value = phi(X, base)
        if value:
            mc = construct_move(X, 0, base)
            return BestMove(mc.move, mc.resulting, value, False)
    else:
        if oracle is None:
            oracle = GrundyOracle(pset, legal)
        value = oracle(X)
        if value:
            Y = next(Y for Y in opts if oracle(Y) == 0)
            return BestMove(tuple(a - b for a, b in zip(X, Y)), Y, value, False)

    moves = sorted(tuple(a - b for a, b in zip(X, Y)) for Y in opts)
    single = [C for C in moves if weight(C) == 1]
    C = (single or moves)[0]
    return BestMove(C, tuple(a - c for a, c in zip(X, C)), value, True)
