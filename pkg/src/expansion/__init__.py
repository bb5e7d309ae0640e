"""Walk moments, spread-expansion coefficients and the implicit equation solver."""

from .coefficients import (
    DegenerateSeriesError,
    approx_spread,
    c2_decomposition,
    c2_decomposition_check,
    c2_equality_report,
    c2_upper_bound,
    c_coefficients,
    estimate_from_series,
    truncated_spread,
)
from .implicit import implicit_spread, solve_implicit_lambda
from .moments import moment_series, star_clique_moments, walk_counts, walk_moment

__all__ = [
    'DegenerateSeriesError',
    'approx_spread',
    'c2_decomposition',
    'c2_decomposition_check',
    'c2_equality_report',
    'c2_upper_bound',
    'c_coefficients',
    'estimate_from_series',
    'implicit_spread',
    'moment_series',
    'solve_implicit_lambda',
    'star_clique_moments',
    'truncated_spread',
    'walk_counts',
    'walk_moment',
]
