"""Immutable small-graph value type and the named constructions.

Adjacency is stored as one integer bitmask per vertex, so a ``Graph`` is a
cheap hashable value that can be shared between pool workers.
"""

import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..config import HARD_MAX_ORDER, get_config
from ..errors import ComputationRefused, ParameterRangeError
from ..models.degree_sequence import DegreeSequence


class OrderOverflowError(ComputationRefused):
    """Raised when a construction would exceed the graph order cap."""
    pass


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_order(n: int) -> None:
    cap = min(HARD_MAX_ORDER, get_config().max_order)
    if n > cap:
        raise OrderOverflowError(f"graph order {n} exceeds the cap of {cap}")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Attributes:
        n: Vertex count (1..64)
        rows: Adjacency bitmask of each vertex; bit v of rows[u] is set iff uv is an edge
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if self.n > HARD_MAX_ORDER:
            raise OrderOverflowError(f"graph order {self.n} exceeds {HARD_MAX_ORDER}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} references a vertex outside 0..{self.n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({u}, {v})")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list on vertices 0..n-1."""
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[int]]) -> "Graph":
        """Build a graph from a dense 0/1 matrix."""
        n = len(matrix)
        rows = []
        for u in range(n):
            row = 0
            for v in range(n):
                if matrix[u][v]:
                    row |= 1 << v
            rows.append(row)
        return cls(n, tuple(rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Build a graph from a networkx graph, relabelling nodes in iteration order."""
        index = {node: i for i, node in enumerate(graph.nodes())}
        return cls.from_edges(len(index), ((index[u], index[v]) for u, v in graph.edges()))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    # -- queries ---------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> List[Tuple[int, int]]:
        """List edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self.rows]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def max_degree(self) -> int:
        return max(self.degrees())

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(tuple(sorted(self.degrees(), reverse=True)), realizable=True)

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        """Dense adjacency matrix as a numpy array."""
        matrix = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            matrix[u, v] = 1
            matrix[v, u] = 1
        return matrix

    def is_regular(self) -> Optional[int]:
        """Return the common degree if the graph is regular, else None."""
        degrees = set(self.degrees())
        return degrees.pop() if len(degrees) == 1 else None

    def components(self) -> List[int]:
        """Connected components as vertex bitmasks, ordered by smallest vertex."""
        remaining = (1 << self.n) - 1
        found = []
        while remaining:
            seed = remaining & -remaining
            component = seed
            frontier = seed
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.rows[v]
                frontier = reach & ~component
                component |= frontier
            found.append(component)
            remaining &= ~component
        return found

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def bipartition(self) -> Optional[Tuple[int, int]]:
        """Return the two colour classes as bitmasks, or None if not bipartite."""
        colour = [-1] * self.n
        for start in range(self.n):
            if colour[start] >= 0:
                continue
            colour[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for v in iter_bits(self.rows[u]):
                    if colour[v] < 0:
                        colour[v] = 1 - colour[u]
                        stack.append(v)
                    elif colour[v] == colour[u]:
                        return None
        left = sum(1 << v for v in range(self.n) if colour[v] == 0)
        return left, ((1 << self.n) - 1) & ~left

    # -- derived graphs --------------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertex v as perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabelled 0..k-1 in the given order."""
        position = {v: i for i, v in enumerate(vertices)}
        edges = [
            (position[u], position[v])
            for u in vertices for v in iter_bits(self.rows[u])
            if v in position and position[u] < position[v]
        ]
        return Graph.from_edges(len(vertices), edges)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(self.rows)))

    def add_vertex(self, neighbourhood: int) -> "Graph":
        """Append vertex n adjacent to the vertices in the ``neighbourhood`` bitmask."""
        _check_order(self.n + 1)
        new = self.n
        rows = [row | (((neighbourhood >> u) & 1) << new) for u, row in enumerate(self.rows)]
        rows.append(neighbourhood)
        return Graph(self.n + 1, tuple(rows))


# -- named constructions -----------------------------------------------------

def _require_positive(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        raise ParameterRangeError(f"{name} must be at least {minimum}, got {value}")


def complete(k: int) -> Graph:
    """K_k."""
    _require_positive("k", k)
    _check_order(k)
    full = (1 << k) - 1
    return Graph(k, tuple(full & ~(1 << u) for u in range(k)))


def empty(k: int) -> Graph:
    """kP_1, the edgeless graph."""
    _require_positive("k", k)
    _check_order(k)
    return Graph(k, (0,) * k)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side labelled first."""
    _require_positive("a", a)
    _require_positive("b", b)
    return join(empty(a), empty(b))


def star(b: int) -> Graph:
    """K_{1,b} with the centre at vertex 0."""
    return complete_bipartite(1, b)


def cycle(k: int) -> Graph:
    """C_k."""
    _require_positive("k", k, minimum=3)
    _check_order(k)
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    """P_k, the path on k vertices."""
    _require_positive("k", k)
    _check_order(k)
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


CONSTRUCTIONS: Dict[str, Callable[..., Graph]] = {
    "complete": complete,
    "empty": empty,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "cycle": cycle,
    "path": path,
}


def construct(kind: str, *params: int) -> Graph:
    """Build a named graph.

    Args:
        kind: One of complete, empty, complete_bipartite, star, cycle, path,
            tait_extremal, star_of_cliques
        *params: Size parameters of the construction

    Returns:
        Graph: The named graph with canonical labels 0..n-1

    Raises:
        ValueError: If the kind is unknown or the parameter count is wrong
        ParameterRangeError: If a size parameter is non-positive
        OrderOverflowError: If the order exceeds the cap
    """
    builders = dict(CONSTRUCTIONS, tait_extremal=tait_extremal, star_of_cliques=star_of_cliques)
    if kind not in builders:
        raise ValueError(f"Unknown construction: {kind}")
    try:
        return builders[kind](*params)
    except TypeError as e:
        raise ValueError(f"Wrong parameters for {kind}: {e}") from None


# -- graph algebra ---------------------------------------------------------------

def join(g: Graph, h: Graph) -> Graph:
    """G ∨ H: disjoint union plus every edge between the two sides (g labelled first)."""
    n = g.n + h.n
    _check_order(n)
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in g.rows]
    rows.extend((row << g.n) | g_mask for row in h.rows)
    return Graph(n, tuple(rows))


def disjoint_union(parts: Sequence[Tuple[Graph, int]]) -> Graph:
    """Block-diagonal union of ``multiplicity`` copies of each graph, in order.

    Args:
        parts: Sequence of (graph, multiplicity) pairs

    Returns:
        Graph: The disjoint union

    Raises:
        OrderOverflowError: If the total order exceeds the cap
        ValueError: If the union would be empty
    """
    for _, multiplicity in parts:
        if multiplicity < 0:
            raise ParameterRangeError("multiplicities must be non-negative")
    n = sum(g.n * m for g, m in parts)
    if n == 0:
        raise ValueError("disjoint union of nothing has no vertices")
    _check_order(n)
    rows: List[int] = []
    offset = 0
    for g, multiplicity in parts:
        for _ in range(multiplicity):
            rows.extend(row << offset for row in g.rows)
            offset += g.n
    return Graph(n, tuple(rows))


def build_extremal(head: Graph, ell: int, n: int, t: int) -> Graph:
    """Build L ∨ (ℓK_t ∪ (n−|L|−tℓ)P_1).

    Vertices of L come first, then the cliques, then the isolated vertices.

    Args:
        head: The join head L on s−1 vertices
        ell: Number of K_t blocks
        n: Total order
        t: Clique size

    Returns:
        Graph: The construction

    Raises:
        ParameterRangeError: If the isolated-vertex count would be negative
        OrderOverflowError: If n exceeds the cap
    """
    _require_positive("t", t)
    if ell < 0:
        raise ParameterRangeError(f"ell must be non-negative, got {ell}")
    isolated = n - head.n - t * ell
    if isolated < 0:
        raise ParameterRangeError(
            f"n={n} is too small for |L|={head.n} and {ell} copies of K_{t}"
        )
    _check_order(n)
    if n == head.n:
        return head
    parts = [(complete(t), ell)]
    if isolated:
        parts.append((empty(1), isolated))
    return join(head, disjoint_union(parts))


def star_of_cliques(s: int, t: int, q: int) -> Graph:
    """(s−1)K_1 ∨ qK_t."""
    _require_positive("s", s, minimum=2)
    _require_positive("q", q)
    return build_extremal(empty(s - 1), q, s - 1 + q * t, t)


def tait_extremal(s: int, t: int, n: int) -> Graph:
    """K_{s−1} ∨ ⌊(n−s+1)/t⌋K_t, the equality case of the spectral radius bound.

    Raises:
        ParameterRangeError: Unless n ≡ s−1 (mod t) and n ≥ s−1+t
    """
    _require_positive("s", s, minimum=2)
    _require_positive("t", t)
    if (n - s + 1) % t != 0 or n < s - 1 + t:
        raise ParameterRangeError(f"need n ≡ s−1 (mod t) and n ≥ s−1+t, got n={n}")
    return build_extremal(complete(s - 1), (n - s + 1) // t, n, t)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdős–Rényi G(n, p) drawn from ``rng``."""
    _check_order(n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)
