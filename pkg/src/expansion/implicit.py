"""Newton solver for the implicit eigenvalue equation λ² = Σ a_k λ^{-k}.

Both extreme eigenvalues of a complete join L ∨ R satisfy the equation
whenever |λ| exceeds the spectral radius of R; the truncated sum is used
here, so the roots carry the truncation tail.
"""

import logging
import math
from typing import Optional

from ..errors import ConvergenceError, ParameterRangeError
from ..models.expansion import MomentSeries

logger = logging.getLogger(__name__)

BRANCHES = ("positive", "negative")
MAX_ITERATIONS = 200
MAX_HALVINGS = 60


def _residual(coefficients, lam: float):
    value = lam * lam
    slope = 2.0 * lam
    inverse = 1.0 / lam
    power = 1.0
    for k, a_k in enumerate(coefficients):
        value -= a_k * power
        slope += k * a_k * power * inverse
        power *= inverse
    return value, slope


def solve_implicit_lambda(
    series: MomentSeries,
    branch: str = "positive",
    order: Optional[int] = None,
    tol: float = 1e-12
) -> float:
    """Solve λ² = Σ_{k≤K} a_k λ^{-k} by damped Newton from ±√a₀.

    A step that lands inside the |λ| ≤ Δ(R) region or increases |f| is halved.
    The stopping rule is |f(λ)| < tol·max(1, λ²).

    Args:
        series: Moment series with at least K+1 entries
        branch: 'positive' for λ₁, 'negative' for λₙ
        order: Truncation index K ≥ 6 (defaults to the full series)
        tol: Relative residual tolerance

    Returns:
        float: The root on the requested branch

    Raises:
        ParameterRangeError: On a bad branch, K < 6, or a seed inside the guard
        ConvergenceError: After 200 iterations or when the guard is crossed
    """
    if branch not in BRANCHES:
        raise ParameterRangeError(f"branch must be one of {BRANCHES}, got {branch!r}")
    order = series.order if order is None else order
    if order < 6 or order > series.order:
        raise ParameterRangeError(f"truncation K must lie in 6..{series.order}, got {order}")
    if series.a0 <= 0:
        raise ParameterRangeError("a0 must be positive")
    coefficients = [float(a) for a in series.a[:order + 1]]
    guard = float(series.right_max_degree or 0)
    lam = math.sqrt(series.a0) * (1.0 if branch == "positive" else -1.0)
    if abs(lam) <= guard:
        raise ParameterRangeError(f"seed |λ| = {abs(lam)} does not exceed Δ(R) = {guard}")

    for iteration in range(MAX_ITERATIONS):
        value, slope = _residual(coefficients, lam)
        if abs(value) < tol * max(1.0, lam * lam):
            logger.debug(f"implicit {branch} root {lam} after {iteration} iterations")
            return lam
        step = value / slope
        if abs(step) <= 1e-15 * abs(lam):
            return lam
        candidate = lam - step
        halvings = 0
        while halvings < MAX_HALVINGS and (
            abs(candidate) <= guard or abs(_residual(coefficients, candidate)[0]) > abs(value)
        ):
            step /= 2.0
            candidate = lam - step
            halvings += 1
        if abs(candidate) <= guard:
            raise ConvergenceError(f"iterate {candidate} fell inside the |λ| ≤ {guard} region")
        lam = candidate
    raise ConvergenceError(f"Newton did not converge in {MAX_ITERATIONS} iterations")


def implicit_spread(series: MomentSeries, order: Optional[int] = None) -> float:
    """Positive root minus negative root of the truncated equation."""
    return (
        solve_implicit_lambda(series, "positive", order)
        - solve_implicit_lambda(series, "negative", order)
    )
