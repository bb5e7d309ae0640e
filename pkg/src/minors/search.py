"""Exact H-minor containment by branch-set search.

H-vertices are placed one at a time. Each is mapped to a connected set of
still-unused G-vertices that touches the branch set of every already-placed
H-neighbour. Sets are generated once each: seeds are taken from the
vertices adjacent to the first placed neighbour (or from all unused
vertices), and a set is produced only from its smallest seed.
Interchangeable H-vertices (twins) must receive branch sets with increasing
minimum vertex.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..config import get_config
from ..errors import ComputationRefused, WorkbenchError
from ..graphs.core import Graph, complete_bipartite, iter_bits, popcount
from ..models.minor import MinorResult, MinorWitness
from ..observability import get_metrics_collector

logger = logging.getLogger(__name__)


class MinorSearchCapError(ComputationRefused):
    """Raised when G exceeds the exact minor-search order cap."""
    pass


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _placement_order(h: Graph) -> List[int]:
    degrees = h.degrees()
    order: List[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        v = max(remaining, key=lambda u: (popcount(h.rows[u] & placed), degrees[u], -u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def _twin_predecessor(h: Graph, order: List[int]) -> List[Optional[int]]:
    """For each position, the latest earlier position holding a twin of that H-vertex."""
    result: List[Optional[int]] = []
    for i, v in enumerate(order):
        previous = None
        for j in range(i):
            u = order[j]
            if (h.rows[u] & ~(1 << v)) == (h.rows[v] & ~(1 << u)):
                previous = j
        result.append(previous)
    return result


def connected_sets(rows: Sequence[int], allowed: int, seed: int, limit: int) -> Iterator[int]:
    """Connected subsets of ``allowed`` containing ``seed``, each exactly once.

    Args:
        rows: Adjacency bitmasks
        allowed: Vertices available to the set (must contain seed)
        seed: Vertex every set contains
        limit: Largest set size

    Yields:
        int: Vertex bitmask of each set
    """
    def grow(current: int, size: int, frontier: int, banned: int) -> Iterator[int]:
        yield current
        if size >= limit:
            return
        candidates = frontier
        while candidates:
            bit = candidates & -candidates
            candidates ^= bit
            v = bit.bit_length() - 1
            extended = current | bit
            reach = (candidates | rows[v]) & allowed & ~extended & ~banned
            yield from grow(extended, size + 1, reach, banned)
            banned |= bit

    start = 1 << seed
    yield from grow(start, 1, rows[seed] & allowed & ~start, 0)


class _Search:
    """One branch-set search of H in G."""

    def __init__(self, g: Graph, h: Graph, stop: Optional[threading.Event] = None):
        self.g = g
        self.h = h
        self.order = _placement_order(h)
        self.twin = _twin_predecessor(h, self.order)
        position = {v: i for i, v in enumerate(self.order)}
        self.earlier = [
            [position[u] for u in iter_bits(h.rows[v]) if position[u] < i]
            for i, v in enumerate(self.order)
        ]
        self.later_count = [
            sum(1 for u in iter_bits(h.rows[v]) if position[u] > i)
            for i, v in enumerate(self.order)
        ]
        self.stop = stop or threading.Event()
        self.nodes = 0

    def neighbourhood(self, mask: int) -> int:
        reach = 0
        for v in iter_bits(mask):
            reach |= self.g.rows[v]
        return reach & ~mask

    def candidates(self, i: int, chosen: List[int], unused: int) -> Iterator[int]:
        """Branch sets for placement position i."""
        remaining_after = len(self.order) - i - 1
        limit = popcount(unused) - remaining_after
        if limit < 1:
            return
        earlier = self.earlier[i]
        touching = [self.neighbourhood(chosen[j]) for j in earlier]
        seeds = (touching[0] & unused) if touching else unused
        twin = self.twin[i]
        twin_floor = _lowest(chosen[twin]) if twin is not None else -1
        allowed = unused
        for seed in iter_bits(seeds):
            for mask in connected_sets(self.g.rows, allowed, seed, limit):
                if _lowest(mask) <= twin_floor:
                    continue
                reach = self.neighbourhood(mask)
                if all(reach & chosen[j] for j in earlier):
                    yield mask
            allowed &= ~(1 << seed)

    def feasible(self, i: int, chosen: List[int], unused: int) -> bool:
        """Every placed set still has room for its unplaced H-neighbours."""
        if popcount(unused) < len(self.order) - i - 1:
            return False
        for j in range(i + 1):
            needed = self._unplaced_neighbours(j, i)
            if needed and popcount(self.neighbourhood(chosen[j]) & unused) < needed:
                return False
        return True

    def _unplaced_neighbours(self, j: int, i: int) -> int:
        v = self.order[j]
        return sum(
            1 for k in range(i + 1, len(self.order)) if (self.h.rows[v] >> self.order[k]) & 1
        )

    def extend(self, i: int, chosen: List[int], unused: int) -> Optional[List[int]]:
        if i == len(self.order):
            return list(chosen)
        if self.stop.is_set():
            return None
        for mask in self.candidates(i, chosen, unused):
            self.nodes += 1
            chosen.append(mask)
            if self.feasible(i, chosen, unused & ~mask):
                found = self.extend(i + 1, chosen, unused & ~mask)
                if found is not None:
                    return found
            chosen.pop()
        return None

    def first_choices(self) -> List[int]:
        return list(self.candidates(0, [], (1 << self.g.n) - 1))

    def from_first(self, mask: int) -> Optional[List[int]]:
        unused = ((1 << self.g.n) - 1) & ~mask
        if not self.feasible(0, [mask], unused):
            return None
        return self.extend(1, [mask], unused)

    def witness(self, chosen: List[int]) -> MinorWitness:
        masks = [0] * self.h.n
        for position, v in enumerate(self.order):
            masks[v] = chosen[position]
        return MinorWitness.from_masks(masks)


def _check_cap(g: Graph) -> None:
    cap = get_config().minor_max_n
    if g.n > cap:
        get_metrics_collector().record_refusal("minor_cap")
        raise MinorSearchCapError(f"exact minor search is capped at n={cap}, got n={g.n}")


def has_minor(g: Graph, h: Graph, threads: int = 1) -> MinorResult:
    """Decide whether H is a minor of G.

    Args:
        g: Host graph (order at most the configured cap)
        h: Pattern graph
        threads: Workers for the fan-out over the first branch set

    Returns:
        MinorResult: found flag, a verified witness when found, and nodes visited

    Raises:
        MinorSearchCapError: If g exceeds the order cap
    """
    _check_cap(g)
    if h.n > g.n or h.edge_count() > g.edge_count():
        return MinorResult(found=False)

    collector = get_metrics_collector()
    with collector.timed("minor", f"n={g.n},h={h.n}"):
        if threads <= 1:
            search = _Search(g, h)
            chosen = search.extend(0, [], (1 << g.n) - 1)
            nodes = search.nodes
        else:
            chosen, nodes, search = _parallel(g, h, threads)

    if chosen is None:
        return MinorResult(found=False, nodes=nodes)
    witness = search.witness(chosen)
    if not verify_witness(g, h, witness):
        raise WorkbenchError(f"minor search produced an invalid witness {witness}")
    return MinorResult(found=True, witness=witness, nodes=nodes)


def _parallel(g: Graph, h: Graph, threads: int) -> Tuple[Optional[List[int]], int, "_Search"]:
    stop = threading.Event()
    root = _Search(g, h, stop)
    workers: List[_Search] = []

    def run(mask: int) -> Tuple[Optional[List[int]], _Search]:
        worker = _Search(g, h, stop)
        workers.append(worker)
        return worker.from_first(mask), worker

    result: Optional[List[int]] = None
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(run, mask) for mask in root.first_choices()]
        for future in as_completed(futures):
            chosen, _ = future.result()
            if chosen is not None and result is None:
                result = chosen
                stop.set()
    return result, sum(w.nodes for w in workers), root


def has_kst_minor(g: Graph, s: int, t: int, threads: int = 1) -> MinorResult:
    """Decide whether K_{s,t} is a minor of G (witness lists the s-side first)."""
    return has_minor(g, complete_bipartite(s, t), threads=threads)


def verify_witness(g: Graph, h: Graph, witness: MinorWitness) -> bool:
    """Independent check of a minor model using networkx.

    Branch sets must be non-empty, pairwise disjoint, each connected in G,
    and every edge of H must be realized by at least one G-edge between the
    corresponding sets.
    """
    if len(witness.branch_sets) != h.n:
        return False
    try:
        witness.validate()
    except ValueError:
        return False
    graph = g.to_networkx()
    sets = [set(branch) for branch in witness.branch_sets]
    if any(not branch.issubset(graph.nodes) for branch in sets):
        return False
    if any(not nx.is_connected(graph.subgraph(branch)) for branch in sets):
        return False
    for u, v in h.edges():
        if not any(graph.has_edge(x, y) for x in sets[u] for y in sets[v]):
            return False
    return True
