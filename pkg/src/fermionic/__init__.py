"""Generalized Kostka polynomials and fermionic characters of affine sl(r+1)."""

from .characters import (
    LevelRestrictionError,
    WeightGradedCharacter,
    char_fusion_V,
    char_fusion_W,
    char_V_general,
    char_V_rect,
    char_W_general,
    char_W_rect,
    char_W_rect_translated,
    inverse_kostka_column,
    string_functions,
)
from .kostka import KostkaMatrix, build_kostka_matrix, invert_unitriangular, kostka_poly
from .oracles import finite_char, lr_multiplicity, weyl_kac_char
from .qseries import LaurentPolynomial, TruncatedSeries
from .weights import PartitionShape, RankedWeight, RectangularSequence

__all__ = [
    "LaurentPolynomial",
    "TruncatedSeries",
    "RankedWeight",
    "PartitionShape",
    "RectangularSequence",
    "KostkaMatrix",
    "kostka_poly",
    "build_kostka_matrix",
    "invert_unitriangular",
    "WeightGradedCharacter",
    "LevelRestrictionError",
    "char_W_rect",
    "char_W_rect_translated",
    "char_V_rect",
    "char_fusion_W",
    "char_fusion_V",
    "char_V_general",
    "char_W_general",
    "inverse_kostka_column",
    "string_functions",
    "finite_char",
    "lr_multiplicity",
    "weyl_kac_char",
]
