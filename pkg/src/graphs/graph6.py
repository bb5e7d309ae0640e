"""graph6 encoding and decoding.

The bit packing itself is delegated to networkx; this module enforces the
order cap and turns malformed input into ``Graph6Error``.
"""

from typing import Union

import networkx as nx

from ..config import HARD_MAX_ORDER
from ..errors import MalformedInput
from .core import Graph

_HEADER = b">>graph6<<"


class Graph6Error(MalformedInput):
    """Raised for malformed graph6 strings."""
    pass


def _declared_order(data: bytes) -> tuple:
    """Parse the order prefix; return (n, body)."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) < 4:
        raise Graph6Error("truncated graph6 order header")
    if data[1] == 126:
        raise Graph6Error(f"graph6 orders above {HARD_MAX_ORDER} are not supported")
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    return n, data[4:]


def decode(text: Union[str, bytes]) -> Graph:
    """Decode a graph6 string.

    Args:
        text: graph6 string, optionally with the >>graph6<< header

    Returns:
        Graph: The decoded graph

    Raises:
        Graph6Error: Malformed header, bad characters or truncated bit stream
    """
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("graph6 characters must lie in the range 63..126")
    n, body = _declared_order(data)
    if n < 1:
        raise Graph6Error("graph6 order must be positive")
    if n > HARD_MAX_ORDER:
        raise Graph6Error(f"graph6 order {n} exceeds {HARD_MAX_ORDER}")
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"graph6 body for n={n} needs {expected} characters, got {len(body)}"
        )
    try:
        graph = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise Graph6Error(f"cannot decode graph6: {e}") from e
    return Graph.from_networkx(graph)


def encode(g: Graph) -> str:
    """Encode a graph as graph6 (no header, no trailing newline)."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b"\n").decode("ascii")
