"""Coefficients of the spread expansion and the c₂ decomposition.

With x_k = a_k / a₀ the spread of a complete join expands as
2√a₀ + 2c₂/√a₀ + 2c₄/a₀^{3/2} + 2c₆/a₀^{5/2} + O(a₀^{-7/2}); the odd
coefficients cancel between λ₁ and λₙ.
"""

import logging
from fractions import Fraction
from typing import Dict, Optional, Tuple

import mpmath

from ..admissibility.psi import maximize_psi, psi_from_degrees
from ..errors import ComputationRefused
from ..graphs.core import Graph
from ..models.expansion import ExpansionEstimate, MomentSeries
from .moments import moment_series

logger = logging.getLogger(__name__)

Coefficients = Tuple[Fraction, Fraction, Fraction]


class DegenerateSeriesError(ComputationRefused):
    """Raised when a₀ = 0 or the series is too short for the coefficients."""
    pass


def _ratios(series: MomentSeries) -> list:
    if series.order < 6:
        raise DegenerateSeriesError(f"need moments through k=6, got K={series.order}")
    if series.a0 == 0:
        raise DegenerateSeriesError("a0 = 0: one side of the join is empty")
    return [Fraction(value, series.a0) for value in series.a[:7]]


def c_coefficients(series: MomentSeries) -> Coefficients:
    """Exact (c₂, c₄, c₆) of the spread expansion.

    Raises:
        DegenerateSeriesError: If a₀ = 0 or fewer than seven moments are given
    """
    x = _ratios(series)
    x1, x2, x3, x4, x5, x6 = x[1:7]
    F = Fraction
    c2 = -F(3, 8) * x1 ** 2 + F(1, 2) * x2
    c4 = (
        -F(105, 128) * x1 ** 4
        + F(35, 16) * x1 ** 2 * x2
        - F(5, 8) * x2 ** 2
        - F(5, 4) * x1 * x3
        + F(1, 2) * x4
    )
    c6 = (
        -F(3003, 1024) * x1 ** 6
        + F(3003, 256) * x1 ** 4 * x2
        - F(693, 64) * x1 ** 2 * x2 ** 2
        + F(21, 16) * x2 ** 3
        - F(21, 32) * (11 * x1 ** 3 - 12 * x1 * x2) * x3
        - F(7, 8) * x3 ** 2
        + F(7, 16) * (9 * x1 ** 2 - 4 * x2) * x4
        - F(7, 4) * x1 * x5
        + F(1, 2) * x6
    )
    return c2, c4, c6


def truncated_spread(a0: int, coefficients: Coefficients, dps: Optional[int] = None):
    """2√a₀ + 2c₂/√a₀ + 2c₄/a₀^{3/2} + 2c₆/a₀^{5/2}.

    Returns a float, or an mpmath.mpf evaluated at ``dps`` digits when given.
    """
    c2, c4, c6 = coefficients
    if dps is None:
        root = a0 ** 0.5
        return 2 * root + 2 * float(c2) / root + 2 * float(c4) / root ** 3 + 2 * float(c6) / root ** 5
    with mpmath.workdps(dps):
        root = mpmath.sqrt(a0)
        terms = [
            2 * root,
            2 * mpmath.mpf(c2.numerator) / c2.denominator / root,
            2 * mpmath.mpf(c4.numerator) / c4.denominator / root ** 3,
            2 * mpmath.mpf(c6.numerator) / c6.denominator / root ** 5,
        ]
        return mpmath.fsum(terms)


def estimate_from_series(series: MomentSeries) -> ExpansionEstimate:
    coefficients = c_coefficients(series)
    return ExpansionEstimate(
        a0=series.a0,
        c2=coefficients[0],
        c4=coefficients[1],
        c6=coefficients[2],
        approx_spread=truncated_spread(series.a0, coefficients),
    )


def approx_spread(head: Graph, rest: Graph) -> ExpansionEstimate:
    """Truncated spread expansion of head ∨ rest.

    Accuracy needs |λ| > Δ(rest); checking that is the caller's job.
    """
    return estimate_from_series(moment_series(head, rest, order=6))


def c2_decomposition(head: Graph, rest: Graph, t: int) -> Dict[str, Fraction]:
    """Both sides of the c₂ rewriting, exactly.

    c₂ = (t−1)²/6 − (3/8)(l₁/(3l₀) + r₁/r₀ − 2(t−1)/3)² + ψ(L)/(6l₀)
         + (r₂ − (t−1)r₁)/(2r₀), with ψ taken on l₀ = |L| vertices.
    """
    series = moment_series(head, rest, order=2)
    l0, l1, l2 = series.l
    r0, r1, r2 = series.r
    a0, a1, a2 = series.a
    F = Fraction
    lhs = -F(3, 8) * F(a1, a0) ** 2 + F(1, 2) * F(a2, a0)
    psi_value = psi_from_degrees(l1, l2, l0 + 1, t)
    balance = F(l1, 3 * l0) + F(r1, r0) - F(2 * (t - 1), 3)
    rhs = (
        F((t - 1) ** 2, 6)
        - F(3, 8) * balance ** 2
        + psi_value / (6 * l0)
        + F(r2 - (t - 1) * r1, 2 * r0)
    )
    return {'lhs': lhs, 'rhs': rhs, 'psi': psi_value, 'balance': balance}


def c2_decomposition_check(head: Graph, rest: Graph, t: int) -> float:
    """|LHS − RHS| of the c₂ rewriting; zero for every input."""
    parts = c2_decomposition(head, rest, t)
    return float(abs(parts['lhs'] - parts['rhs']))


def c2_upper_bound(s: int, t: int, psi_max: Fraction, l0: Optional[int] = None) -> Fraction:
    """(t−1)²/6 + ψ_max/(6l₀) with l₀ = s−1 unless given."""
    l0 = s - 1 if l0 is None else l0
    return Fraction((t - 1) ** 2, 6) + Fraction(psi_max) / (6 * l0)


def c2_equality_report(
    head: Graph,
    rest: Graph,
    t: int,
    psi_max: Optional[Fraction] = None
) -> Dict[str, object]:
    """Evaluate the three conditions under which c₂ meets its upper bound.

    Args:
        head: L, on l₀ = s−1 vertices
        rest: R
        t: Minor parameter t
        psi_max: Max of ψ on l₀ vertices; computed via maximize_psi if omitted

    Returns:
        Dictionary with c₂, the bound, each condition and whether all hold
    """
    series = moment_series(head, rest, order=2)
    l0, l1, _ = series.l
    r0, r1, r2 = series.r
    s = l0 + 1
    parts = c2_decomposition(head, rest, t)
    if psi_max is None:
        psi_max = maximize_psi(s, t).psi_max
    bound = c2_upper_bound(s, t, psi_max, l0)
    conditions = {
        'psi_attains_max': parts['psi'] == psi_max,
        'rest_degrees_saturated': r2 == (t - 1) * r1,
        'moments_balanced': parts['balance'] == 0,
    }
    return {
        'c2': parts['lhs'],
        'upper_bound': bound,
        'within_bound': parts['lhs'] <= bound,
        'rest_max_degree_ok': rest.max_degree() <= t - 1,
        'conditions': conditions,
        'equality': all(conditions.values()),
        'attains_bound': parts['lhs'] == bound,
    }
