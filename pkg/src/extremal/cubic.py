"""Reduced cubic of the star-of-cliques family and its trigonometric roots.

The quotient of (s−1)P₁ ∨ (ℓK_t ∪ mP₁) over the blocks (head, cliques,
isolated) has characteristic polynomial
λ³ − (t−1)λ² − a₀λ + (s−1)(t−1)(n−s+1−ℓt) with a₀ = (s−1)(n−s+1).
Shifting λ = x + (t−1)/3 gives x³ − px + q.
"""

import logging
import math
from fractions import Fraction
from typing import Tuple

import mpmath

from ..errors import ComputationRefused, ParameterRangeError
from ..models.extremal import CubicParams

logger = logging.getLogger(__name__)

ARCCOS_SLACK = 1e-15


class DiscriminantError(ComputationRefused):
    """Raised when x³ − px + q lacks three distinct real roots."""
    pass


def discriminant_ok(p: float, q: float) -> bool:
    return p > 0 and p ** 3 > 6.75 * q * q


def _cos_argument(p: float, q: float) -> float:
    if not discriminant_ok(p, q):
        raise DiscriminantError(f"need p³ > (27/4)q², got p={p}, q={q}")
    argument = -(abs(q) / 2.0) / (p / 3.0) ** 1.5
    if argument < -1.0 - ARCCOS_SLACK:
        raise DiscriminantError(f"arccos argument {argument} outside [-1, 1]")
    return max(-1.0, min(1.0, argument))


def cubic_alpha(p: float, q: float) -> float:
    """α = (1/3)·arccos(−(|q|/2)/(p/3)^{3/2}) ∈ [π/6, π/3)."""
    return math.acos(_cos_argument(p, q)) / 3.0


def cubic_roots(p: float, q: float) -> Tuple[float, float, float]:
    """The three real roots of x³ − px + q = 0, descending.

    Roots are computed for |q|; for q < 0 they are negated, since −x solves
    the cubic with −q.

    Raises:
        DiscriminantError: Unless p³ > (27/4)q²
    """
    alpha = cubic_alpha(p, q)
    radius = 2.0 * math.sqrt(p / 3.0)
    roots = [radius * math.cos(alpha - 2.0 * math.pi * j / 3.0) for j in range(3)]
    if q < 0:
        roots = [-x for x in roots]
    return tuple(sorted(roots, reverse=True))


def cubic_spread(p: float, q: float) -> float:
    """Largest minus smallest root, 2√p·sin(α + π/3)."""
    return 2.0 * math.sqrt(p) * math.sin(cubic_alpha(p, q) + math.pi / 3.0)


def cubic_spread_mp(p: Fraction, q: Fraction, dps: int = 50) -> mpmath.mpf:
    """cubic_spread evaluated in mpmath at ``dps`` significant digits."""
    with mpmath.workdps(dps):
        p_mp = mpmath.mpf(p.numerator) / p.denominator
        q_mp = abs(mpmath.mpf(q.numerator) / q.denominator)
        if p_mp <= 0 or p_mp ** 3 <= mpmath.mpf(27) / 4 * q_mp ** 2:
            raise DiscriminantError(f"need p³ > (27/4)q², got p={p}, q={q}")
        alpha = mpmath.acos(-(q_mp / 2) / (p_mp / 3) ** mpmath.mpf(1.5)) / 3
        return 2 * mpmath.sqrt(p_mp) * mpmath.sin(alpha + mpmath.pi / 3)


def _check_family(s: int, t: int, n: int, ell: int) -> None:
    if not 2 <= s <= t:
        raise ParameterRangeError(f"need t ≥ s ≥ 2, got s={s}, t={t}")
    if ell < 0 or ell * t > n - s + 1:
        raise ParameterRangeError(f"need 0 ≤ ℓt ≤ n−s+1, got ℓ={ell}, t={t}, n={n}")


def cubic_coefficients(s: int, t: int, n: int, ell: int) -> Tuple[Fraction, Fraction]:
    """Exact (p, q) of the reduced cubic.

    p = (s−1)(n−s+1) + (t−1)²/3
    q = (s−1)(t−1)((2/3)(n−s+1) − ℓt) − (2/27)(t−1)³
    """
    _check_family(s, t, n, ell)
    rest = n - s + 1
    p = Fraction((s - 1) * rest) + Fraction((t - 1) ** 2, 3)
    q = (s - 1) * (t - 1) * (Fraction(2 * rest, 3) - ell * t) - Fraction(2 * (t - 1) ** 3, 27)
    return p, q


def cubic_params(s: int, t: int, n: int, ell: int) -> CubicParams:
    """Reduced cubic for (s−1)P₁ ∨ (ℓK_t ∪ (n−s+1−ℓt)P₁).

    Raises:
        ParameterRangeError: Unless t ≥ s ≥ 2 and 0 ≤ ℓt ≤ n−s+1
    """
    p_exact, q_exact = cubic_coefficients(s, t, n, ell)
    p, q = float(p_exact), float(q_exact)
    ok = discriminant_ok(p, q)
    if not ok:
        logger.warning(
            "reduced cubic has a repeated root",
            extra={'extra_data': {'s': s, 't': t, 'n': n, 'ell': ell}}
        )
        return CubicParams(
            p=p, q=q, discriminant_ok=False, alpha=float('nan'),
            roots=(float('nan'),) * 3, spread=float('nan'),
            shift=Fraction(t - 1, 3), p_exact=p_exact, q_exact=q_exact,
        )
    return CubicParams(
        p=p,
        q=q,
        discriminant_ok=True,
        alpha=cubic_alpha(p, q),
        roots=cubic_roots(p, q),
        spread=cubic_spread(p, q),
        shift=Fraction(t - 1, 3),
        p_exact=p_exact,
        q_exact=q_exact,
    )


def family_spread(s: int, t: int, n: int, ell: int) -> float:
    """Exact spread of (s−1)P₁ ∨ (ℓK_t ∪ mP₁) from the cubic.

    The remaining eigenvalues are t−1, −1 and 0, so λₙ is the smallest cubic
    root unless one of those lies below it. At ℓ = 0 the clique block is empty
    and the graph is K_{s−1,n−s+1} with spread 2√a₀.
    """
    if ell == 0:
        _check_family(s, t, n, ell)
        return 2.0 * math.sqrt((s - 1) * (n - s + 1))
    params = cubic_params(s, t, n, ell)
    if not params.discriminant_ok:
        raise DiscriminantError(f"degenerate cubic at s={s}, t={t}, n={n}, ell={ell}")
    low, high = params.lambda_roots[2], params.lambda_roots[0]
    others = _other_eigenvalues(s, t, n, ell)
    if others:
        low = min(low, min(others))
    return high - low


def family_spread_mp(s: int, t: int, n: int, ell: int, dps: int = 50) -> mpmath.mpf:
    """family_spread in mpmath precision."""
    if ell == 0:
        _check_family(s, t, n, ell)
        with mpmath.workdps(dps):
            return 2 * mpmath.sqrt((s - 1) * (n - s + 1))
    p, q = cubic_coefficients(s, t, n, ell)
    value = cubic_spread_mp(p, q, dps)
    others = _other_eigenvalues(s, t, n, ell)
    if others and min(others) < cubic_params(s, t, n, ell).lambda_roots[2]:
        raise DiscriminantError("the smallest eigenvalue is not a cubic root")
    return value


def _other_eigenvalues(s: int, t: int, n: int, ell: int) -> list:
    # eigenvalues outside the cubic: t−1 and −1 from the cliques, 0 from twins
    return ([float(t - 1), -1.0] if ell >= 1 else []) + [0.0]
