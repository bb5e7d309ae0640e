"""Exact minor containment and edge-count filters."""

from .filters import certifies_minor, edge_filters, kostochka_prince_applies
from .search import (
    MinorSearchCapError,
    connected_sets,
    has_kst_minor,
    has_minor,
    verify_witness,
)

__all__ = [
    'MinorSearchCapError',
    'certifies_minor',
    'connected_sets',
    'edge_filters',
    'has_kst_minor',
    'has_minor',
    'kostochka_prince_applies',
    'verify_witness',
]
