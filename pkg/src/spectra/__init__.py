"""Adjacency spectra, spread and spectral bounds."""

from .bounds import (
    LambdaWindow,
    NonRegularError,
    RegularSide,
    clique_union_side,
    empty_side,
    join_graph_spectrum,
    join_regular_spectrum,
    kst_spread_closed_form,
    lambdan_window,
    regular_side,
    spread_lower_bound,
    tait_bound,
    window_check,
)
from .solver import (
    METHODS,
    check_spectrum,
    eigenvalues,
    jacobi_eigenvalues,
    spectral_radius,
    spread,
    symmetric_eigenvalues,
)

__all__ = [
    'LambdaWindow',
    'METHODS',
    'NonRegularError',
    'RegularSide',
    'check_spectrum',
    'clique_union_side',
    'eigenvalues',
    'empty_side',
    'jacobi_eigenvalues',
    'join_graph_spectrum',
    'join_regular_spectrum',
    'kst_spread_closed_form',
    'lambdan_window',
    'regular_side',
    'spectral_radius',
    'spread',
    'spread_lower_bound',
    'symmetric_eigenvalues',
    'tait_bound',
    'window_check',
]
