"""Exhaustive maximum-spread search over small K_{s,t}-minor-free graphs."""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Tuple

from ..config import get_config
from ..errors import ComputationRefused
from ..graphs.canonical import canonical_code
from ..graphs.core import Graph, iter_bits, popcount
from ..graphs.enumeration import enumerate_graphs
from ..graphs.graph6 import encode
from ..minors.filters import certifies_minor, edge_filters
from ..minors.search import has_kst_minor
from ..models.search import SearchRecord
from ..observability import get_metrics_collector
from ..spectra.bounds import tait_bound, window_check
from ..spectra.solver import eigenvalues

logger = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-10


class SearchCapError(ComputationRefused):
    """Raised when the census order exceeds the configured cap."""
    pass


def family_membership(g: Graph, s: int, t: int) -> Optional[int]:
    """Return ℓ if g is L ∨ (ℓK_t ∪ mP₁) with |L| = s−1, else None.

    L must be joined to every other vertex; the rest must split into
    components that are K_t or single vertices.
    """
    full = (1 << g.n) - 1
    for head in itertools.combinations(range(g.n), s - 1):
        head_mask = sum(1 << v for v in head)
        outside = full & ~head_mask
        if any((g.rows[v] & outside) != outside for v in head):
            continue
        if not outside:
            return 0
        rest = g.induced([v for v in range(g.n) if not (head_mask >> v) & 1])
        ell = 0
        ok = True
        for component in rest.components():
            size = popcount(component)
            if size == 1:
                continue
            clique = all(popcount(rest.rows[v] & component) == size - 1 for v in iter_bits(component))
            if size == t and clique:
                ell += 1
            else:
                ok = False
                break
        if ok:
            return ell
    return None


def _evaluate(g: Graph, s: int, t: int) -> Tuple[str, Optional[Tuple[float, float]]]:
    """Classify one census member: ('filtered'|'minor'|'free', (spread, λ₁) if free)."""
    if certifies_minor(edge_filters(g, s, t)):
        return "filtered", None
    if has_kst_minor(g, s, t).found:
        return "minor", None
    spectrum = eigenvalues(g)
    return "free", (spectrum.spread, spectrum.largest)


def _check_caps(n: int) -> None:
    config = get_config()
    cap = min(config.search_max_n, config.enum_max_n)
    if n > cap:
        get_metrics_collector().record_refusal("search_cap")
        raise SearchCapError(f"exhaustive search is capped at n={cap}, got n={n}")


def search_max_spread(n: int, s: int, t: int, threads: Optional[int] = None) -> SearchRecord:
    """Maximize the spread over K_{s,t}-minor-free classes on n vertices.

    The enumeration stream is the producer; minor filtering and spectra run
    on a worker pool and merge by an order-insensitive max.

    Args:
        n: Order
        s: Minor parameter s
        t: Minor parameter t
        threads: Worker count (defaults to the configured pool size)

    Returns:
        SearchRecord: Winners, census counts and consistency diagnostics

    Raises:
        SearchCapError: If n exceeds the search or enumeration cap
    """
    _check_caps(n)
    threads = threads or get_config().threads
    collector = get_metrics_collector()
    logger.info(f"Searching max spread for K_{s},{t}-minor-free graphs on {n} vertices")

    graphs = list(enumerate_graphs(n))
    with collector.timed("search", f"n={n},s={s},t={t}"):
        with ThreadPoolExecutor(max_workers=threads) as executor:
            outcomes = list(executor.map(lambda g: _evaluate(g, s, t), graphs))

    free: List[Tuple[Graph, float, float]] = []
    filter_skips = 0
    for g, (status, values) in zip(graphs, outcomes):
        if status == "filtered":
            filter_skips += 1
        elif status == "free":
            free.append((g, values[0], values[1]))
    collector.increment("graphs_examined", len(graphs))
    collector.record_search(n, s, t, examined=len(graphs), minor_free=len(free))

    tait_violations = 0
    crs_violations = 0
    ceiling = tait_bound(s, t, n) if 2 <= s <= t and n >= s + t else None
    for g, _, radius in free:
        if ceiling is not None and radius > ceiling + 1e-9:
            tait_violations += 1
        if s == 2 and t >= 2 and 2 * g.edge_count() > (t + 1) * (n - 1):
            crs_violations += 1
    if tait_violations or crs_violations:
        logger.warning(
            "census members above a proven ceiling",
            extra={'extra_data': {'tait': tait_violations, 'crs': crs_violations}}
        )

    if not free:
        return SearchRecord(
            n=n, s=s, t=t, best_graphs=(), best_graph6=(), best_spread=0.0,
            runner_up_gap=None, census_size=0, examined=len(graphs), winner_in_family=False,
            filter_skips=filter_skips,
        )

    best = max(value for _, value, _ in free)
    winners = sorted(
        (g for g, value, _ in free if value >= best - TIE_TOLERANCE), key=canonical_code
    )
    others = [value for _, value, _ in free if value < best - TIE_TOLERANCE]
    winner = winners[0]
    ell = family_membership(winner, s, t)
    record = SearchRecord(
        n=n,
        s=s,
        t=t,
        best_graphs=tuple(canonical_code(g).hex() for g in winners),
        best_graph6=tuple(encode(g) for g in winners),
        best_spread=best,
        runner_up_gap=(best - max(others)) if others else None,
        census_size=len(free),
        examined=len(graphs),
        winner_in_family=ell is not None,
        winner_ell=ell,
        tait_violations=tait_violations,
        crs_violations=crs_violations,
        filter_skips=filter_skips,
        winner_checks=_winner_checks(winner, s, t, ceiling),
    )
    record.validate()
    return record


def _winner_checks(g: Graph, s: int, t: int, ceiling: Optional[float]) -> Dict[str, object]:
    spectrum = eigenvalues(g)
    checks: Dict[str, object] = {
        'filters': [v.to_dict() for v in edge_filters(g, s, t)],
        'tait_bound': ceiling,
        'tait_consistent': None if ceiling is None else spectrum.largest <= ceiling + 1e-9,
    }
    if 2 <= s <= t and g.n >= s:
        checks['window'] = window_check(g, s, t, slack=1.0, spectrum=spectrum)
    return checks
