"""Closed-form Sprague-Grundy functions.

* ``sigma``: digitwise sum of the coordinates, the value of any
  beta-saturation of Nim.
* ``welter_sg``: b-saturations of Welter's game.
* ``phi``: beta-saturations of misere Nim (origin removed).
* ``misere_grundy_conway``: Conway's misere function of ordinary Nim.
* ``weight_formula``: the least move weight a move set needs for its
  misere game to have Grundy function ``phi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .exceptions import DomainError
from .mixed_radix import Base, Digits, _as_base, add, add_all, all_ones_int, mord, ord, to_digits


def sigma(X: Sequence[int], base) -> int:
    return add_all(X, _as_base(base))


def sigma_digits(X: Sequence[int], base) -> Digits:
    base = _as_base(base)
    return to_digits(sigma(X, base), base)


def phi(X: Sequence[int], base) -> int:
    base = _as_base(base)
    if not any(X):
        raise DomainError("phi is undefined at the origin")
    return add(sigma(X, base), all_ones_int(mord(X, base), base), base)


def welter_sg(X: Sequence[int], b: int) -> int:
    if len(set(X)) != len(X):
        raise DomainError(f"Welter positions need distinct coordinates, got {tuple(X)}")
    base = Base.constant(b)
    terms = [b ** (ord(abs(xi - xj), base) + 1) - 1 for xi, xj in combinations(X, 2)]
    return add_all([*X, *terms], base)


def misere_grundy_conway(X: Sequence[int]) -> int:
    s = sigma(X, Base.constant(2))
    if max(X, default=0) >= 2:
        return s
    return 1 - s


@dataclass(frozen=True)
class WeightReport:
    w: int
    achieving_level: int
    case_tag: str
    sup_tail: int  # sup of the radices at levels >= 1


def _level_term(base: Base, k: int, L: int) -> int:
    delta = 1 if L == 0 else 0
    small_head = 1 if base[0] < 2 * k else 0
    return min(base[L] - delta, k - delta * small_head)


def weight_formula(base, k: int) -> WeightReport:
    """Max over levels of ``min(beta_L - [L=0], k - [L=0][beta_0 < 2k])``.

    The term depends on ``L`` only through ``beta_L`` and whether ``L == 0``,
    so levels past the head all repeat the ``tail`` term; scanning
    ``0 .. max(len(head), 1)`` covers every distinct value.
    """
    base = _as_base(base)
    if k < 1:
        raise ValueError("k must be >= 1")
    levels = range(max(len(base.head), 1) + 1)
    terms = [_level_term(base, k, L) for L in levels]
    w = max(terms)
    level = terms.index(w)

    B = max(base[L] for L in range(1, max(len(base.head), 1) + 1))
    b0 = base[0]
    if B >= k or b0 >= 2 * k:
        tag, w_cases = "k", k
    elif k <= b0:
        tag, w_cases = "k-1", k - 1
    else:
        tag, w_cases = "max(beta0-1,B)", max(b0 - 1, B)
    if w != w_cases:
        raise AssertionError(f"weight forms disagree for base {base}, k={k}: {w} vs {w_cases}")
    return WeightReport(w, level, tag, B)
