"""Sprague-Grundy functions of saturated subtraction games in mixed-radix number systems."""

from .exceptions import (
    BaseMismatchError,
    BaseParseError,
    DomainError,
    InvalidDigitError,
    MixsatError,
    NoSuchMoveError,
)
from .formulas import WeightReport, misere_grundy_conway, phi, sigma, weight_formula, welter_sg
from .games import (
    GrundyOracle,
    GrundyTable,
    MoveSet,
    PositionSet,
    grundy_bruteforce,
    grundy_table,
    move_member,
    options,
    weight,
)
from .mixed_radix import INF, Base, Digits, all_ones, from_digits, mord, neg_digit, ominus, ord, oplus, to_digits
from .saturation import SaturationReport, check_sg1, check_sg2, is_saturation, weight_witness
from .solver import BestMove, MoveConstruction, best_move, build_u_claim, construct_move, lemma_u, solution_formula

__version__ = "0.1.0"
