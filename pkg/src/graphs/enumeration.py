"""Isomorphism-class enumeration of small graphs by vertex augmentation.

Level k+1 is produced from the class representatives of level k by adding
one vertex with every possible neighbourhood; children are kept when their
canonical code has not been seen on that level. Only one level of codes is
held in memory at a time.
"""

import logging
from typing import Iterator, List, Optional

from ..config import HARD_ENUM_MAX_N, get_config
from ..errors import ComputationRefused
from ..observability import get_metrics_collector
from .canonical import canonical_code, canonical_form
from .core import Graph, empty

logger = logging.getLogger(__name__)


class EnumerationCapError(ComputationRefused):
    """Raised when enumeration is requested above the configured cap."""
    pass


def _check_cap(n: int, cap: Optional[int]) -> None:
    limit = get_config().enum_max_n if cap is None else cap
    limit = min(limit, HARD_ENUM_MAX_N)
    if n < 1:
        raise ComputationRefused(f"n must be positive, got {n}")
    if n > limit:
        raise EnumerationCapError(f"enumeration is capped at n={limit}, got n={n}")


def _next_level(level: List[Graph]) -> List[Graph]:
    seen = set()
    children: List[Graph] = []
    for parent in level:
        for neighbourhood in range(1 << parent.n):
            child = parent.add_vertex(neighbourhood)
            code = canonical_code(child)
            if code in seen:
                continue
            seen.add(code)
            children.append(child)
    return children


def enumerate_graphs(n: int, cap: Optional[int] = None) -> Iterator[Graph]:
    """Yield one graph per isomorphism class on n vertices.

    Representatives are yielded in canonical form, ordered by number of
    edges and then canonical code, so the stream is deterministic.

    Args:
        n: Order
        cap: Optional cap overriding the configured one (never above 9)

    Yields:
        Graph: One representative per class

    Raises:
        EnumerationCapError: If n exceeds the cap
    """
    _check_cap(n, cap)
    logger.info(f"Enumerating graphs on {n} vertices")
    level = [empty(1)]
    for k in range(2, n + 1):
        level = _next_level(level)
        logger.debug(f"Level {k}: {len(level)} classes")
    representatives = sorted(
        (canonical_form(g) for g in level),
        key=lambda g: (g.edge_count(), canonical_code(g)),
    )
    get_metrics_collector().increment("classes_enumerated", len(representatives))
    yield from representatives


def count_graphs(n: int, cap: Optional[int] = None) -> int:
    """Number of isomorphism classes on n vertices."""
    return sum(1 for _ in enumerate_graphs(n, cap=cap))
