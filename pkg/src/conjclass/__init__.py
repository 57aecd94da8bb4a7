"""Exact conjugacy-class counting for symmetric, alternating, Lie-type and wreath-product groups."""

from .errors import (
    CensusError,
    ConjclassError,
    NoFormulaError,
    NotStoredError,
    OracleCapError,
    UndecidedError,
)
from .liecount import BoundedCount, SimpleGroupId, k_bound, k_exact, parse_group
from .partitions import k_alternating, k_symmetric, p
from .permgroup import PermutationGroup, closure
from .wreath import WreathDescriptor, k_wreath_cyclic, k_wreath_generic

__version__ = "0.1.0"

__all__ = [
    "BoundedCount",
    "CensusError",
    "ConjclassError",
    "NoFormulaError",
    "NotStoredError",
    "OracleCapError",
    "PermutationGroup",
    "SimpleGroupId",
    "UndecidedError",
    "WreathDescriptor",
    "closure",
    "k_alternating",
    "k_bound",
    "k_exact",
    "k_symmetric",
    "k_wreath_cyclic",
    "k_wreath_generic",
    "p",
    "parse_group",
]
