"""Data models and structures."""

from .admissibility import AdmissibilityRow, PsiReport
from .degree_sequence import DegreeSequence
from .expansion import ExpansionEstimate, MomentSeries
from .extremal import CubicParams, ExtremalConstruction, ScanResult
from .minor import EdgeFilterVerdict, MinorResult, MinorWitness
from .rational import rational_from_dict, rational_to_dict
from .search import ConvergenceRow, ConvergenceTable, SearchRecord
from .spectrum import Spectrum

__all__ = [
    # Graph-level models
    "DegreeSequence",
    "Spectrum",
    # Expansion models
    "MomentSeries",
    "ExpansionEstimate",
    # Admissibility models
    "PsiReport",
    "AdmissibilityRow",
    # Extremal models
    "CubicParams",
    "ExtremalConstruction",
    "ScanResult",
    # Minor models
    "MinorWitness",
    "MinorResult",
    "EdgeFilterVerdict",
    # Harness models
    "SearchRecord",
    "ConvergenceRow",
    "ConvergenceTable",
    # Helpers
    "rational_to_dict",
    "rational_from_dict",
]
