"""ℓ₀ optimizer, ℓ scans and the two-term spread formula."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from typing import List, Optional, Tuple

from ..admissibility.psi import maximize_psi
from ..config import get_config
from ..errors import ComputationRefused, ParameterRangeError
from ..graphs.core import Graph, build_extremal, empty
from ..graphs.graph6 import encode
from ..models.extremal import ExtremalConstruction, ScanResult
from ..observability import get_metrics_collector
from ..spectra.solver import spread
from .cubic import family_spread

logger = logging.getLogger(__name__)

SCAN_METHODS = ("dense", "cubic", "auto")
TIE_TOLERANCE = 1e-9


class NonAdmissiblePairError(ComputationRefused):
    """Raised when ℓ₀ is requested for a pair whose extremal head is not empty."""
    pass


def _check_pair(s: int, t: int) -> None:
    if not 2 <= s <= t:
        raise ParameterRangeError(f"need t ≥ s ≥ 2, got s={s}, t={t}")


def ell_one(s: int, t: int, n: int) -> Fraction:
    """ℓ₁ = (2/(3t))(n−s+1 − (t−1)²/(9(s−1))), the root of q in ℓ."""
    _check_pair(s, t)
    return Fraction(2, 3 * t) * (n - s + 1 - Fraction((t - 1) ** 2, 9 * (s - 1)))


def nearest_integers(value: Fraction) -> Tuple[int, ...]:
    """Nearest integer, or both neighbours when value is a half-integer."""
    floor = math.floor(value)
    if value - floor == Fraction(1, 2):
        return floor, floor + 1
    return (math.floor(value + Fraction(1, 2)),)


def xi_interval(s: int, t: int, n: int, ell0: int) -> Tuple[int, int]:
    """Integers ξ with ⌊(2n+ξ)/(3t)⌋ = ℓ₀, as [ξ_min, ξ_max]."""
    _check_pair(s, t)
    return 3 * t * ell0 - 2 * n, 3 * t * ell0 + 3 * t - 1 - 2 * n


def two_term_spread(s: int, t: int, n: int, psi_max: Fraction) -> float:
    """2√a₀ + ((t−1)² + ψ_max/(s−1)) / (3√a₀) with a₀ = (s−1)(n−s+1)."""
    _check_pair(s, t)
    if n < s:
        raise ParameterRangeError(f"need n ≥ s, got n={n}")
    root = math.sqrt((s - 1) * (n - s + 1))
    return 2 * root + ((t - 1) ** 2 + float(Fraction(psi_max) / (s - 1))) / (3 * root)


def ell_zero_asymptotic(s: int, t: int, n: int, edges_lmax: int) -> Fraction:
    """Leading term (2/(3t) − 2|E(L_max)|/(3t(t−1)(s−1)))(n−s+1) of ℓ₀."""
    _check_pair(s, t)
    return (
        Fraction(2, 3 * t) - Fraction(2 * edges_lmax, 3 * t * (t - 1) * (s - 1))
    ) * (n - s + 1)


def _fits_dense(n: int) -> bool:
    return n <= get_config().max_order


def ell_zero(s: int, t: int, n: int) -> ExtremalConstruction:
    """Optimal number of K_t blocks for an admissible pair.

    Args:
        s: Minor parameter s
        t: Minor parameter t
        n: Order

    Returns:
        ExtremalConstruction: ℓ₁, the candidate(s), their graphs when n fits
        the order cap, and exact spreads

    Raises:
        NonAdmissiblePairError: If (s, t) is not admissible
        ParameterRangeError: If n cannot hold the candidate construction
    """
    _check_pair(s, t)
    report = maximize_psi(s, t)
    if not report.admissible:
        get_metrics_collector().record_refusal("non_admissible")
        raise NonAdmissiblePairError(
            f"(s,t)=({s},{t}) is not admissible; use scan_ell with the ψ-maximizing head"
        )
    ell1 = ell_one(s, t, n)
    candidates = nearest_integers(ell1)
    capacity = (n - s + 1) // t
    for ell in candidates:
        if not 0 <= ell <= capacity:
            raise ParameterRangeError(f"n={n} cannot hold ℓ={ell} copies of K_{t}")

    graphs: Tuple[Graph, ...] = ()
    if _fits_dense(n):
        graphs = tuple(build_extremal(empty(s - 1), ell, n, t) for ell in candidates)
        spreads = tuple(spread(g) for g in graphs)
        method = "dense"
    else:
        spreads = tuple(family_spread(s, t, n, ell) for ell in candidates)
        method = "cubic"
    intervals = tuple(xi_interval(s, t, n, ell) for ell in candidates)
    construction = ExtremalConstruction(
        s=s,
        t=t,
        n=n,
        ell_one=ell1,
        ell_candidates=candidates,
        exact_spreads=spreads,
        formula_spread=two_term_spread(s, t, n, report.psi_max),
        spread_method=method,
        graphs=graphs,
        xi_intervals=intervals,
        xi_offset=intervals[0][0] if len(candidates) == 1 else None,
    )
    if construction.is_tie:
        logger.info(
            "two extremal candidates",
            extra={'extra_data': {'s': s, 't': t, 'n': n, 'ell_one': ell1}}
        )
    return construction


def _resolve_method(method: str, n: int, head_is_empty: bool) -> str:
    if method not in SCAN_METHODS:
        raise ValueError(f"Unknown scan method: {method}")
    if method == "auto":
        method = "dense" if _fits_dense(n) else "cubic"
    if method == "cubic" and not head_is_empty:
        raise ParameterRangeError("the cubic path needs the empty head (s−1)P₁")
    return method


def _is_unimodal(values: List[float], tol: float) -> bool:
    peak = max(range(len(values)), key=lambda i: values[i])
    rising = all(values[i] <= values[i + 1] + tol for i in range(peak))
    falling = all(values[i] >= values[i + 1] - tol for i in range(peak, len(values) - 1))
    return rising and falling


def scan_ell(
    s: int,
    t: int,
    n: int,
    head: Optional[Graph] = None,
    method: str = "auto",
    threads: Optional[int] = None,
    tie_tolerance: float = TIE_TOLERANCE
) -> ScanResult:
    """Exact spread of head ∨ (ℓK_t ∪ mP₁) for every feasible ℓ.

    Args:
        s: Minor parameter s
        t: Minor parameter t
        n: Order
        head: Join head on s−1 vertices (default (s−1)P₁)
        method: 'dense' (build and diagonalize), 'cubic' (empty head only) or 'auto'
        threads: Worker count (defaults to the configured pool size)
        tie_tolerance: Top-two gap at or below which the instance is a near-tie

    Returns:
        ScanResult: The table, its argmax set and the top-two gap
    """
    if s < 2 or t < 1:
        raise ParameterRangeError(f"need s ≥ 2 and t ≥ 1, got s={s}, t={t}")
    head = head or empty(s - 1)
    if head.n != s - 1:
        raise ParameterRangeError(f"head has {head.n} vertices, expected {s - 1}")
    method = _resolve_method(method, n, head.edge_count() == 0)
    capacity = (n - head.n) // t
    if capacity < 0:
        raise ParameterRangeError(f"n={n} is smaller than the head")

    def evaluate(ell: int) -> Tuple[int, float]:
        if method == "cubic":
            return ell, family_spread(s, t, n, ell)
        return ell, spread(build_extremal(head, ell, n, t))

    threads = threads or get_config().threads
    table: List[Tuple[int, float]] = []
    with get_metrics_collector().timed("scan", f"s={s},t={t},n={n}"):
        with ThreadPoolExecutor(max_workers=threads) as executor:
            futures = [executor.submit(evaluate, ell) for ell in range(capacity + 1)]
            for future in as_completed(futures):
                table.append(future.result())
    table.sort()

    values = [value for _, value in table]
    ranked = sorted(values, reverse=True)
    best = ranked[0]
    gap = ranked[0] - ranked[1] if len(ranked) > 1 else math.inf
    best_ells = tuple(ell for ell, value in table if value >= best - tie_tolerance)
    result = ScanResult(
        s=s,
        t=t,
        n=n,
        method=method,
        table=tuple(table),
        best_ells=best_ells,
        best_spread=best,
        gap=gap,
        tie_tolerance=tie_tolerance,
        unimodal=_is_unimodal(values, tie_tolerance),
        head=encode(head),
    )
    if not result.decisive:
        get_metrics_collector().record_near_tie(f"scan s={s} t={t} n={n}", gap)
        logger.warning(
            "near-tie in ell scan",
            extra={'extra_data': {'s': s, 't': t, 'n': n, 'gap': gap, 'best_ells': best_ells}}
        )
    return result


def agreement(s: int, t: int, n: int, method: str = "auto") -> dict:
    """Compare ell_zero's candidates with scan_ell's argmax set.

    Returns:
        Dictionary with both sets, the gap, and a verdict of 'consistent',
        'inconsistent' or 'near_tie'
    """
    construction = ell_zero(s, t, n)
    scan = scan_ell(s, t, n, method=method)
    if not scan.decisive:
        verdict = "near_tie"
    elif set(construction.ell_candidates) == set(scan.best_ells):
        verdict = "consistent"
    else:
        verdict = "inconsistent"
        logger.warning(
            "ell_zero inconsistent with the exact scan at this n",
            extra={'extra_data': {'s': s, 't': t, 'n': n}}
        )
    return {
        's': s,
        't': t,
        'n': n,
        'candidates': list(construction.ell_candidates),
        'scan_best': list(scan.best_ells),
        'gap': scan.gap,
        'verdict': verdict,
    }
