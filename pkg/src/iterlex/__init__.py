"""Incremental lexicographic escalier of ideals of points.

Points are added one at a time; after each point the package knows the lex
Groebner escalier of the vanishing ideal, the point-to-term correspondence,
a squarefree separator family and the multiplication matrices, all obtained
by updating the previous results.
"""
from .barcode import BarCode
from .errors import (DimensionMismatch, DuplicatePoint, FieldMismatch, InputError,
                     InternalError, IterlexError, ParseError)
from .lexgame import GameState, add_point, full_run, new_game
from .mulmat import MulState, groebner_border, normal_form
from .oracles import bm_escalier_oracle, cerlienco_mureddu
from .pipeline import Session
from .scalar import RATIONALS, FieldSpec, Scalar, parse_scalar
from .separators import Separator, SeparatorFamily, lagrange_factor
from .trie import PointTrie

__version__ = "0.1.0"

__all__ = [
    "BarCode", "DimensionMismatch", "DuplicatePoint", "FieldMismatch", "FieldSpec",
    "GameState", "InputError", "InternalError", "IterlexError", "MulState", "ParseError",
    "PointTrie", "RATIONALS", "Scalar", "Separator", "SeparatorFamily", "Session",
    "add_point", "bm_escalier_oracle", "cerlienco_mureddu", "full_run", "groebner_border",
    "lagrange_factor", "new_game", "normal_form", "parse_scalar",
]
