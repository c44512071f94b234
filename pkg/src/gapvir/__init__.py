"""Exact symbolic computation for the gap-p Virasoro algebra and its
Whittaker, free-field, U(C L_0)-free and tensor-product modules."""

from .algebra import (C, I, L, LieElement, SubalgebraSpec, Sym, bracket, exp_ad, graded_degree, is_member,
                      parse_element)
from .errors import GapvirError
from .scalar import Scalar

__all__ = ["C", "I", "L", "LieElement", "Scalar", "SubalgebraSpec", "Sym", "GapvirError", "bracket",
           "exp_ad", "graded_degree", "is_member", "parse_element"]
__version__ = "0.1.0"
