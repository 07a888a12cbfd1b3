"""Mixed-radix numbers with carry-free digitwise arithmetic.

A base is a sequence of radices ``beta_0, beta_1, ...`` (each at least 2).
Place values are the radix products ``beta^(L) = beta_0 * ... * beta_{L-1}``.
Only eventually constant sequences are representable: a finite ``head``
followed by a ``tail`` radix that repeats forever.

Digit vectors are little-endian, so ``24`` in base 10 is ``[4, 2]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .exceptions import BaseMismatchError, BaseParseError, InvalidDigitError

INF = math.inf


@dataclass(frozen=True)
class Base:
    """Radix sequence ``head[0], ..., head[m-1], tail, tail, ...``.

    Trailing head entries equal to ``tail`` are dropped on construction, so
    ``Base((6, 2), 2) == Base((6,), 2)``.
    """

    head: tuple[int, ...]
    tail: int

    def __post_init__(self):
        head = tuple(int(b) for b in self.head)
        tail = int(self.tail)
        if tail < 2 or any(b < 2 for b in head):
            raise BaseParseError(f"every radix must be >= 2, got {head} + ({tail}, ...)")
        while head and head[-1] == tail:
            head = head[:-1]
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def constant(cls, b: int) -> Base:
        return cls((), b)

    @classmethod
    def parse(cls, text: str | int | Base) -> Base:
        """Parse ``"3,2,5,4"`` as (3, 2, 5, 4, 4, ...); the last entry repeats."""
        if isinstance(text, Base):
            return text
        if isinstance(text, int):
            return cls.constant(text)
        parts = [p.strip() for p in str(text).split(",")]
        try:
            radices = [int(p) for p in parts]
        except ValueError:
            raise BaseParseError(f"cannot parse base {text!r}") from None
        if not radices:
            raise BaseParseError("empty base")
        return cls(tuple(radices[:-1]), radices[-1])

    def __getitem__(self, L: int) -> int:
        if L < 0:
            raise IndexError(L)
        return self.head[L] if L < len(self.head) else self.tail

    def __str__(self):
        return ",".join(str(b) for b in (*self.head, self.tail))

    @property
    def is_constant(self) -> bool:
        return not self.head

    def radices(self, n: int) -> list[int]:
        """The first ``n`` radices."""
        return [self[L] for L in range(n)]

    def radix_product(self, L: int) -> int:
        """Place value of digit ``L``; ``radix_product(0) == 1``."""
        return math.prod(self.radices(L))

    def width(self, n: int) -> int:
        """Smallest ``L`` with ``radix_product(L) > n`` (number of digits of ``n >= 0``)."""
        L, q = 0, n
        while q:
            q //= self[L]
            L += 1
        return L


def _as_base(base) -> Base:
    return base if isinstance(base, Base) else Base.parse(base)


@dataclass(frozen=True, eq=False)
class Digits:
    """Digits of a nonnegative integer, little-endian, trailing zeros stripped."""

    digits: tuple[int, ...]
    base: Base

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        for L, d in enumerate(digits):
            if not 0 <= d < self.base[L]:
                raise InvalidDigitError(f"digit {d} at index {L} not in [0, {self.base[L]})")
        while digits and digits[-1] == 0:
            digits = digits[:-1]
        object.__setattr__(self, "digits", digits)

    def __eq__(self, other):
        if not isinstance(other, Digits):
            return NotImplemented
        return self.base == other.base and self.digits == other.digits

    def __hash__(self):
        return hash((self.digits, self.base))

    def __getitem__(self, L: int) -> int:
        return self.digits[L] if L < len(self.digits) else 0

    def __len__(self):
        return len(self.digits)

    def __int__(self):
        return from_digits(self)

    def __str__(self):
        return format_digits(self.digits)


def format_digits(digits: Iterable[int]) -> str:
    return "[" + ",".join(str(d) for d in digits) + "]"


def to_digits(n: int, base) -> Digits:
    if n < 0:
        raise ValueError("negative integers have infinite expansions; use neg_digit")
    base = _as_base(base)
    out = []
    L = 0
    while n:
        n, r = divmod(n, base[L])
        out.append(r)
        L += 1
    return Digits(tuple(out), base)


def from_digits(d: Digits) -> int:
    n = 0
    for L in reversed(range(len(d.digits))):
        n = n * d.base[L] + d.digits[L]
    return n


def digit(n: int, L: int, base) -> int:
    """``L``-th digit of ``n``; negative ``n`` uses the infinite expansion."""
    base = _as_base(base)
    if n < 0:
        return base[L] - 1 - digit(-n - 1, L, base)
    for i in range(L):
        n //= base[i]
    return n % base[L]


neg_digit = digit


def digit_list(n: int, base, width: int | None = None) -> list[int]:
    """Digits of ``n >= 0`` as a plain list, zero padded to ``width``."""
    base = _as_base(base)
    out = []
    L = 0
    while n or (width is not None and L < width):
        n, r = divmod(n, base[L])
        out.append(r)
        L += 1
    return out


def _check_same(a: Digits, b: Digits):
    if a.base != b.base:
        raise BaseMismatchError(f"bases differ: {a.base} vs {b.base}")


def oplus(a: Digits, b: Digits) -> Digits:
    _check_same(a, b)
    n = max(len(a), len(b))
    return Digits(tuple((a[L] + b[L]) % a.base[L] for L in range(n)), a.base)


def ominus(a: Digits, b: Digits) -> Digits:
    _check_same(a, b)
    n = max(len(a), len(b))
    return Digits(tuple((a[L] - b[L]) % a.base[L] for L in range(n)), a.base)


# Integer-level versions. These are what the game code uses.

def _digitwise(a: int, b: int, base: Base, sign: int) -> int:
    out, place, L = 0, 1, 0
    while a or b:
        r = base[L]
        a, da = divmod(a, r)
        b, db = divmod(b, r)
        out += ((da + sign * db) % r) * place
        place *= r
        L += 1
    return out


def add(a: int, b: int, base) -> int:
    """``a (+) b``: digitwise sum mod each radix, for ``a, b >= 0``."""
    return _digitwise(a, b, _as_base(base), 1)


def sub(a: int, b: int, base) -> int:
    """``a (-) b``: digitwise difference mod each radix, for ``a, b >= 0``."""
    return _digitwise(a, b, _as_base(base), -1)


def add_all(values: Iterable[int], base) -> int:
    base = _as_base(base)
    return reduce(lambda a, b: _digitwise(a, b, base, 1), values, 0)


def ord(n: int, base) -> int | float:
    """Index of the lowest nonzero digit of ``n``; ``INF`` for zero.

    Sign invariant, since ``beta^(L)`` divides ``n`` iff it divides ``-n``.
    """
    if n == 0:
        return INF
    base = _as_base(base)
    n = abs(n)
    L = 0
    while n % base[L] == 0:
        n //= base[L]
        L += 1
    return L


def ord_succ(n: int, base) -> int:
    """ord of ``n (-) (-1)``, i.e. of the digit vector ``n_L (+) 1``.

    That is the lowest ``L`` with ``n_L != beta_L - 1``. Always finite for
    ``n >= 0`` because the high digits of ``n`` are zero.
    """
    base = _as_base(base)
    L = 0
    while n % base[L] == base[L] - 1:
        n //= base[L]
        L += 1
    return L


def all_ones(M: int, base) -> Digits:
    """Digits of ``beta^(M+1) - 1``: each digit at its maximum up to index ``M``."""
    base = _as_base(base)
    return Digits(tuple(base[L] - 1 for L in range(M + 1)), base)


def all_ones_int(M: int, base) -> int:
    return _as_base(base).radix_product(M + 1) - 1


def mord(values: Sequence[int], base) -> int | float:
    """Minimum of ``ord`` over the entries; ``INF`` iff all are zero."""
    base = _as_base(base)
    return min((ord(v, base) for v in values), default=INF)
