"""Finite permutation groups with a solvable subgroup of prime-power index.

Stabilizer chains, solvable radicals, composition factors, the catalog of
simple groups with such a subgroup, and the checks run against them.
"""

__version__ = "0.1.0"

from .permgroup import PermGroup  # noqa: E402
from .series import (SimpleFactorId, composition_factors, radical_series,  # noqa: E402
                     solvable_radical)
from .theorems import analyze_pair  # noqa: E402

__all__ = ["PermGroup", "SimpleFactorId", "analyze_pair", "composition_factors",
           "radical_series", "solvable_radical", "__version__"]
