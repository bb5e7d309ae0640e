"""Canonical labelling for isomorphism rejection.

Colour refinement produces an ordered equitable partition; the search then
individualizes vertices of the first smallest non-singleton cell and refines
again until every cell is a singleton. Each leaf gives a relabelling, and
the lexicographically largest upper-triangle certificate over all leaves is
the canonical form. Branches on twin vertices (N(u)−v = N(v)−u) are skipped:
swapping twins is an automorphism that fixes the current partition.
"""

import logging
from typing import List, Optional, Tuple

from ..config import get_config
from ..errors import ComputationRefused
from .core import Graph, popcount

logger = logging.getLogger(__name__)

Partition = List[List[int]]


class CanonicalCapError(ComputationRefused):
    """Raised when the exact canonical search is requested above its order cap."""
    pass


def refine(g: Graph, partition: Partition) -> Partition:
    """Refine an ordered partition until it is equitable.

    A cell splits by the vector of neighbour counts into every cell; the
    fragments are ordered by that vector, so the result commutes with
    relabelling.

    Args:
        g: The graph
        partition: Ordered partition of 0..n-1

    Returns:
        Partition: The coarsest equitable refinement
    """
    cells = [list(cell) for cell in partition]
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: Partition = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {v: tuple(popcount(g.rows[v] & m) for m in masks) for v in cell}
            keys = sorted(set(signature.values()))
            if len(keys) == 1:
                refined.append(cell)
                continue
            changed = True
            for key in keys:
                refined.append([v for v in cell if signature[v] == key])
        cells = refined
        if not changed:
            return cells


def _certificate(g: Graph, order: List[int]) -> int:
    """Upper-triangle adjacency bits in graph6 column order under ``order``."""
    cert = 0
    for j in range(1, g.n):
        row = g.rows[order[j]]
        for i in range(j):
            cert = (cert << 1) | ((row >> order[i]) & 1)
    return cert


def _are_twins(g: Graph, u: int, v: int) -> bool:
    return (g.rows[u] & ~(1 << v)) == (g.rows[v] & ~(1 << u))


def _target_cell(cells: Partition) -> Optional[int]:
    best = None
    for index, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = index
    return best


def _search(g: Graph, cells: Partition, exact: bool, best: List[Tuple[int, List[int]]]) -> None:
    cells = refine(g, cells)
    index = _target_cell(cells)
    if index is None:
        order = [cell[0] for cell in cells]
        cert = _certificate(g, order)
        if not best or cert > best[0][0]:
            best[:] = [(cert, order)]
        return
    target = cells[index]
    branched: List[int] = []
    for v in target:
        if any(_are_twins(g, u, v) for u in branched):
            continue
        branched.append(v)
        rest = [u for u in target if u != v]
        _search(g, cells[:index] + [[v], rest] + cells[index + 1:], exact, best)
        if not exact:
            return


def canonical_labeling(g: Graph, heuristic: bool = False) -> Tuple[List[int], bool]:
    """Compute a canonical vertex order.

    Args:
        g: The graph
        heuristic: Allow a refinement-only order above the exact-path cap

    Returns:
        Tuple of (order, exact) where order[i] is the vertex placed at position i

    Raises:
        CanonicalCapError: If n exceeds the exact cap and heuristic is False
    """
    cap = get_config().canon_exact_max_n
    exact = g.n <= cap
    if not exact and not heuristic:
        raise CanonicalCapError(
            f"exact canonical form is capped at n={cap}; pass heuristic=True for n={g.n}"
        )
    best: List[Tuple[int, List[int]]] = []
    _search(g, [list(range(g.n))], exact, best)
    return best[0][1], exact


def canonical_form(g: Graph, heuristic: bool = False) -> Graph:
    """Relabel ``g`` into its canonical representative."""
    order, _ = canonical_labeling(g, heuristic=heuristic)
    perm = [0] * g.n
    for position, vertex in enumerate(order):
        perm[vertex] = position
    return g.relabel(perm)


def canonical_code(g: Graph, heuristic: bool = False) -> bytes:
    """Canonical byte code: equal for two graphs iff they are isomorphic (exact path).

    The code is the order byte followed by the canonical certificate in
    big-endian bytes. Heuristic codes (n above the exact cap) carry a 0xFF
    prefix so they never collide with exact ones.

    Args:
        g: The graph
        heuristic: Allow refinement-only codes above the exact cap

    Returns:
        bytes: The code
    """
    order, exact = canonical_labeling(g, heuristic=heuristic)
    cert = _certificate(g, order)
    width = (g.n * (g.n - 1) // 2 + 7) // 8
    code = bytes([g.n]) + cert.to_bytes(width, "big")
    return code if exact else b"\xff" + code
