"""Exact construction and verification of a braid group action on the algebra T_n."""

__version__ = "0.1.0"

from .algebra import BasisIndex, DegenerateParameterError, ParamSet, TnAlgebra, TnElement, UNIT
from .braid import BraidAction, BraidWord, canonical_params
from .exact import Polynomial, RationalFunction
from .free_group import FreeWord
from .matrix import EndoMatrix

__all__ = [
    "BasisIndex",
    "BraidAction",
    "BraidWord",
    "DegenerateParameterError",
    "EndoMatrix",
    "FreeWord",
    "ParamSet",
    "Polynomial",
    "RationalFunction",
    "TnAlgebra",
    "TnElement",
    "UNIT",
    "canonical_params",
]
