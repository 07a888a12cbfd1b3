import itertools
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from conftest import TEST_BASES, bases
from mixsat.exceptions import DomainError
from mixsat.formulas import misere_grundy_conway, phi, sigma, sigma_digits, weight_formula, welter_sg
from mixsat.games import GrundyOracle, MoveSet, PositionSet, box, grundy_table
from mixsat.mixed_radix import Base

B = Base.parse


@lru_cache(maxsize=None)
def conway_recursive(X):
    """Conway's misere function by its recursive definition over Nim options."""
    if not any(X):
        return 1
    vals = set()
    for i, x in enumerate(X):
        for y in range(x):
            vals.add(conway_recursive(X[:i] + (y,) + X[i + 1:]))
    n = 0
    while n in vals:
        n += 1
    return n


def weight_max_form(base, k, levels=30):
    best = 0
    for L in range(levels):
        delta = int(L == 0)
        best = max(best, min(base[L] - delta, k - delta * int(base[0] < 2 * k)))
    return best


def weight_case_form(base, k, levels=30):
    B_ = max(base[L] for L in range(1, levels))
    b0 = base[0]
    if B_ >= k or b0 >= 2 * k:
        return k
    if k <= b0 < 2 * k:
        return k - 1
    return max(b0 - 1, B_)


class TestSigma:
    def test_examples(self):
        assert sigma((16, 27), B("3,2,5")) == 7
        assert sigma_digits((16, 27), B("3,2,5")).digits == (1, 0, 1)
        assert sigma((13,), B("3")) == 13
        assert sigma((3, 5), 2) == 6

    @given(st.lists(st.integers(0, 10 ** 6), min_size=1, max_size=6))
    def test_binary_is_xor(self, X):
        x = 0
        for v in X:
            x ^= v
        assert sigma(X, 2) == x

    @pytest.mark.parametrize("b", TEST_BASES)
    def test_matches_bruteforce(self, b):
        base = B(b)
        for bounds in [(9, 9), (5, 5, 5)]:
            t = grundy_table(bounds, PositionSet("all", len(bounds)), MoveSet.ord(base))
            for X in t.positions():
                assert t[X] == sigma(X, base)


class TestPhi:
    def test_examples(self):
        assert phi((2, 2), 2) == 3
        assert phi((2, 3), 2) == 0
        assert phi((2, 2, 2), B("6,2")) == 5
        assert phi((2, 2, 2), B("5,2")) == 0

    def test_origin_rejected(self):
        with pytest.raises(DomainError):
            phi((0, 0), 2)

    def test_misere_grid_right(self):
        text = (Path(__file__).parent / "fixtures" / "grid_misere_ord2.tsv").read_text()
        grid = [row.split("\t") for row in text.splitlines()]
        for x, y in box((9, 9)):
            if (x, y) != (0, 0):
                assert phi((x, y), 2) == int(grid[x][y])

    @pytest.mark.parametrize("b", TEST_BASES)
    def test_theorem(self, b):
        base = B(b)
        for bounds in [(9, 9), (6, 6, 6)]:
            t = grundy_table(bounds, PositionSet("misere", len(bounds)), MoveSet.ord(base))
            for X in t.positions():
                assert t[X] == phi(X, base)

    @given(bases, st.lists(st.integers(0, 10 ** 5), min_size=1, max_size=5))
    def test_permutation_invariant(self, base, X):
        if any(X):
            assert phi(X, base) == phi(sorted(X), base) == phi(X[::-1], base)


class TestWelter:
    def test_examples(self):
        assert welter_sg((1, 4), 3) == 1
        assert welter_sg((11,), 2) == 11
        assert welter_sg((1, 2), 2) == GrundyOracle(PositionSet("welter", 2), MoveSet.unit())((1, 2)) == 2

    def test_repeated_rejected(self):
        with pytest.raises(DomainError):
            welter_sg((3, 3), 2)

    @pytest.mark.parametrize("k", [2, 3])
    @pytest.mark.parametrize("b,mset", [(2, MoveSet.unit()), (2, MoveSet.ord(2)), (3, MoveSet.ord(3))])
    def test_matches_bruteforce(self, k, b, mset):
        t = grundy_table((8,) * k, PositionSet("welter", k), mset)
        for X in t.positions():
            assert t[X] == welter_sg(X, b)

    def test_permutation_invariant(self):
        for X in itertools.permutations((0, 3, 5, 6)):
            assert welter_sg(X, 3) == welter_sg((0, 3, 5, 6), 3)


class TestConway:
    def test_examples(self):
        assert misere_grundy_conway((0, 2)) == 2
        assert misere_grundy_conway((0, 0, 0)) == 1
        assert misere_grundy_conway((1, 1)) == 1 == conway_recursive((1, 1))

    def test_matches_recursion(self):
        for X in itertools.chain(box((7, 7)), box((4, 4, 4))):
            assert misere_grundy_conway(X) == conway_recursive(X)

    def test_zero_sets_agree(self):
        g = GrundyOracle(PositionSet("misere", 2), MoveSet.unit())
        for X in box((12, 12)):
            if any(X):
                assert (misere_grundy_conway(X) == 0) == (g(X) == 0)

    def test_differs_from_misere_nim(self):
        assert GrundyOracle(PositionSet("misere", 2), MoveSet.unit())((0, 2)) == 1


class TestWeightFormula:
    @pytest.mark.parametrize("b", range(2, 7))
    @pytest.mark.parametrize("k", range(2, 7))
    def test_constant_base(self, b, k):
        assert weight_formula(b, k).w == min(b, k)

    def test_examples(self):
        assert weight_formula(B("6,2"), 3).w == 3
        for k in range(2, 8):
            assert weight_formula(2, k).w == 2
        for b in TEST_BASES:
            assert weight_formula(B(b), 1).w == 1

    @given(bases, st.integers(1, 8))
    def test_forms_agree(self, base, k):
        rep = weight_formula(base, k)
        assert rep.w == weight_max_form(base, k) == weight_case_form(base, k)
        assert 1 <= rep.w <= k

    def test_achieving_level(self):
        rep = weight_formula(B("6,2"), 3)
        assert rep.achieving_level == 0 and rep.sup_tail == 2
        assert weight_formula(2, 2).achieving_level == 1

    def test_case_tags(self):
        assert weight_formula(B("4,2"), 3).case_tag == "k-1"
        assert weight_formula(B("2,2"), 3).case_tag == "max(beta0-1,B)"
        assert weight_formula(B("3"), 3).case_tag == "k"
