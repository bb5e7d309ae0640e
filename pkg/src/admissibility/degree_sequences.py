"""Graphical degree sequences: Erdős–Gallai test and Havel–Hakimi realization."""

import itertools
from typing import Iterator, Sequence

from ..errors import WorkbenchError
from ..graphs.core import Graph
from ..models.degree_sequence import DegreeSequence


class NotGraphicalError(WorkbenchError, ValueError):
    """Raised when a degree sequence has no simple-graph realization."""
    pass


def is_graphical(degrees: Sequence[int]) -> bool:
    """Erdős–Gallai test.

    Args:
        degrees: Degrees in any order

    Returns:
        bool: True iff some simple graph has exactly these degrees
    """
    d = sorted(degrees, reverse=True)
    n = len(d)
    if any(x < 0 or x > n - 1 for x in d) or sum(d) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(x, k) for x in d[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def havel_hakimi(degrees: Sequence[int]) -> Graph:
    """Realize a graphical sequence.

    Vertex i receives degrees[i] after sorting non-increasing. Each step
    saturates the vertex with the largest residual degree against the next
    largest residuals; ties go to the lower index.

    Raises:
        NotGraphicalError: If the sequence is not graphical
    """
    d = sorted(degrees, reverse=True)
    n = len(d)
    if n == 0:
        raise NotGraphicalError("empty degree sequence")
    residual = list(d)
    edges = []
    for _ in range(n):
        v = min(range(n), key=lambda i: (-residual[i], i))
        need = residual[v]
        if need == 0:
            break
        residual[v] = 0
        others = sorted((i for i in range(n) if i != v and residual[i] > 0),
                        key=lambda i: (-residual[i], i))
        if len(others) < need:
            raise NotGraphicalError(f"{list(degrees)} is not graphical")
        for u in others[:need]:
            residual[u] -= 1
            edges.append((v, u))
    if any(residual):
        raise NotGraphicalError(f"{list(degrees)} is not graphical")
    return Graph.from_edges(n, edges)


def graphical_sequences(m: int) -> Iterator[DegreeSequence]:
    """Every graphical degree sequence on m vertices, lexicographically decreasing."""
    if m < 1:
        return
    for candidate in itertools.combinations_with_replacement(range(m - 1, -1, -1), m):
        if sum(candidate) % 2 == 0 and is_graphical(candidate):
            yield DegreeSequence(tuple(candidate), realizable=True)


def count_graphical_sequences(m: int) -> int:
    return sum(1 for _ in graphical_sequences(m))

