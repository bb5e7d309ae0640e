"""Walk moments 1'A^k 1 in exact integer arithmetic."""

from typing import List

from ..errors import ParameterRangeError
from ..graphs.core import Graph, iter_bits
from ..models.expansion import MomentSeries


def walk_counts(g: Graph, order: int) -> List[int]:
    """[1'A^0 1, ..., 1'A^order 1] by repeated matrix-vector products.

    Args:
        g: The graph
        order: Largest walk length K ≥ 0

    Returns:
        The K+1 walk totals
    """
    if order < 0:
        raise ParameterRangeError(f"walk length must be non-negative, got {order}")
    vector = [1] * g.n
    totals = [g.n]
    for _ in range(order):
        vector = [sum(vector[w] for w in iter_bits(row)) for row in g.rows]
        totals.append(sum(vector))
    return totals


def walk_moment(g: Graph, k: int) -> int:
    """Number of walks of length k in g."""
    return walk_counts(g, k)[k]


def _convolve(left: List[int], right: List[int]) -> List[int]:
    return [sum(left[j] * right[k - j] for j in range(k + 1)) for k in range(len(left))]


def moment_series(head: Graph, rest: Graph, order: int = 6) -> MomentSeries:
    """Moments of both sides of head ∨ rest and their convolution.

    Args:
        head: The left side L
        rest: The right side R
        order: Truncation index K (6 is enough for the coefficients)

    Returns:
        MomentSeries: The validated series
    """
    left = walk_counts(head, order)
    right = walk_counts(rest, order)
    series = MomentSeries(
        l=tuple(left),
        r=tuple(right),
        a=tuple(_convolve(left, right)),
        right_max_degree=rest.max_degree(),
    )
    series.validate()
    return series


def star_clique_moments(s: int, t: int, n: int, ell: int, order: int = 6) -> MomentSeries:
    """Closed-form moments of (s−1)P₁ ∨ (ℓK_t ∪ mP₁), m = n−s+1−ℓt.

    l_k = 0 and r_k = ℓt(t−1)^k for k ≥ 1, so convergence runs at large n
    never build the graph.

    Raises:
        ParameterRangeError: If the isolated-vertex count would be negative
    """
    if s < 2 or t < 1 or ell < 0:
        raise ParameterRangeError(f"need s ≥ 2, t ≥ 1, ell ≥ 0, got s={s}, t={t}, ell={ell}")
    rest = n - s + 1
    if rest < 1 or ell * t > rest:
        raise ParameterRangeError(f"n={n} cannot hold {ell} copies of K_{t} beside s-1={s - 1}")
    left = [s - 1] + [0] * order
    right = [rest] + [ell * t * (t - 1) ** k for k in range(1, order + 1)]
    return MomentSeries(
        l=tuple(left),
        r=tuple(right),
        a=tuple(_convolve(left, right)),
        right_max_degree=(t - 1) if ell > 0 else 0,
    )
