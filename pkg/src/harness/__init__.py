"""Exhaustive search, convergence experiments and report emission."""

from .convergence import convergence_experiment
from .reports import build_report, render_csv, render_json, to_jsonable, write_output
from .search import SearchCapError, family_membership, search_max_spread

__all__ = [
    'SearchCapError',
    'build_report',
    'convergence_experiment',
    'family_membership',
    'render_csv',
    'render_json',
    'search_max_spread',
    'to_jsonable',
    'write_output',
]
