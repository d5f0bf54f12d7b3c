"""Sensitivity analysis of symmetric Boolean functions.

A symmetric function of n variables is described by its compact truth table
v_0..v_n (v_k is the output when exactly k inputs are 1). The run lengths of
that table form a composition of n+1, and the function reaches the largest
possible sensitivity n exactly when some run has length 1.
"""

from symsens.brute import TruthTable, sensitivity, sensitivity_at
from symsens.core import (
    CompactTruthTable,
    Composition,
    SensitivityProfile,
    compress,
    expand,
    from_composition,
    has_max_sensitivity,
    is_trivial,
    sensitivity_profile,
    symmetry_witness,
    to_composition,
)
from symsens.counting import (
    CountSeries,
    RationalGF,
    asymptotic_ratio,
    count_series,
    expand_series,
    max_sensitivity_count,
    no_ones_count,
    total_count,
)
from symsens.distribution import (
    SensitivityHistogram,
    census,
    verify_theorem1,
    verify_turan,
)
from symsens.errors import DomainError, FormatError, SingularError, SizeError

__all__ = [
    "CompactTruthTable",
    "Composition",
    "CountSeries",
    "DomainError",
    "FormatError",
    "RationalGF",
    "SensitivityHistogram",
    "SensitivityProfile",
    "SingularError",
    "SizeError",
    "TruthTable",
    "asymptotic_ratio",
    "census",
    "compress",
    "count_series",
    "expand",
    "expand_series",
    "from_composition",
    "has_max_sensitivity",
    "is_trivial",
    "max_sensitivity_count",
    "no_ones_count",
    "sensitivity",
    "sensitivity_at",
    "sensitivity_profile",
    "symmetry_witness",
    "to_composition",
    "total_count",
    "verify_theorem1",
    "verify_turan",
]

__version__ = "0.1.0"
