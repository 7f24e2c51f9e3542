"""Exact Heegaard Floer rank counts and cosmetic-surgery obstructions for knot families."""

from .curvemodel import PulledTightCurve, curve_from_pretzel, curve_from_thin, curve_lspace
from .errors import DomainError, NonGenericError, NotApplicable, ParseError, PreconditionError, SurgerySieveError
from .exactnum import EpsRat, Slope, reduce_slope
from .invariants import InvariantPackage
from .pairing import spinc_ranks, total_rank
from .verdict import Status, Verdict

__version__ = "0.1.0"

__all__ = [
    "PulledTightCurve",
    "curve_from_pretzel",
    "curve_from_thin",
    "curve_lspace",
    "DomainError",
    "NonGenericError",
    "NotApplicable",
    "ParseError",
    "PreconditionError",
    "SurgerySieveError",
    "EpsRat",
    "Slope",
    "reduce_slope",
    "InvariantPackage",
    "spinc_ranks",
    "total_rank",
    "Status",
    "Verdict",
]
