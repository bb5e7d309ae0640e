"""Edge-count necessary conditions for K_{s,t}-minor-freeness.

Each bound is applied only inside its hypothesis. A 'fail' verdict means the
edge count alone certifies that a K_{s,t} minor exists.
"""

import logging
import math
from math import factorial
from typing import List, Optional

from ..config import get_config
from ..graphs.core import Graph, popcount
from ..models.minor import EdgeFilterVerdict

logger = logging.getLogger(__name__)


def kostochka_prince_applies(s: int, t: int) -> bool:
    """t ≥ (180·s·log₂s)^(1 + 6·s·log₂s), compared in log space."""
    if s < 2:
        return False
    base = 180 * s * math.log2(s)
    exponent = 1 + 6 * s * math.log2(s)
    return math.log(t) >= exponent * math.log(base)


def _mader(g: Graph, t: int, constant: Optional[float]) -> EdgeFilterVerdict:
    constant = get_config().mader_factor * t if constant is None else constant
    bound = constant * g.n
    edges = g.edge_count()
    return EdgeFilterVerdict(
        name="mader",
        applicable=True,
        bound=bound,
        edges=edges,
        verdict="fail" if edges > bound else "pass",
        heuristic=True,
    )


def _kostochka_prince(g: Graph, s: int, t: int) -> EdgeFilterVerdict:
    edges = g.edge_count()
    if not kostochka_prince_applies(s, t) or g.n < s + t:
        return EdgeFilterVerdict("kostochka_prince", False, None, edges, "not_applicable")
    bound = (t + 3 * s) * (g.n - s + 1) / 2
    return EdgeFilterVerdict(
        "kostochka_prince", True, bound, edges, "fail" if edges > bound else "pass"
    )


def _crs(g: Graph, s: int, t: int) -> EdgeFilterVerdict:
    edges = g.edge_count()
    if s != 2 or t < 2:
        return EdgeFilterVerdict("crs", False, None, edges, "not_applicable")
    bound = (t + 1) * (g.n - 1) / 2
    return EdgeFilterVerdict("crs", True, bound, edges, "fail" if edges > bound else "pass")


def _bipartite(g: Graph, s: int, t: int) -> EdgeFilterVerdict:
    edges = g.edge_count()
    parts = g.bipartition()
    if parts is None or not all(parts):
        return EdgeFilterVerdict("bipartite", False, None, edges, "not_applicable")
    a, b = popcount(parts[0]), popcount(parts[1])
    constant = 4 ** (s + 1) * factorial(s) * t
    bound = min((s - 1) * a + constant * b, (s - 1) * b + constant * a)
    # non-strict: reaching the bound already forces the minor
    return EdgeFilterVerdict(
        "bipartite", True, bound, edges, "fail" if edges >= bound else "pass"
    )


def edge_filters(
    g: Graph,
    s: int,
    t: int,
    mader_constant: Optional[float] = None
) -> List[EdgeFilterVerdict]:
    """Run every edge-count filter on g.

    Args:
        g: The graph
        s: Minor parameter s
        t: Minor parameter t
        mader_constant: Linear-density constant; defaults to mader_factor·t

    Returns:
        Verdicts in the order mader, kostochka_prince, crs, bipartite
    """
    verdicts = [
        _mader(g, t, mader_constant),
        _kostochka_prince(g, s, t),
        _crs(g, s, t),
        _bipartite(g, s, t),
    ]
    failed = [v.name for v in verdicts if v.verdict == "fail" and not v.heuristic]
    if failed:
        logger.debug(f"edge filters certify a K_{s},{t} minor: {failed}")
    return verdicts


def certifies_minor(verdicts: List[EdgeFilterVerdict]) -> bool:
    """True when a proven (non-heuristic) filter fails."""
    return any(v.verdict == "fail" and not v.heuristic for v in verdicts)
