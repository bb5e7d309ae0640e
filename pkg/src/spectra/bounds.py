"""Closed-form spectra and spectral bounds for K_{s,t}-minor-free graphs."""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..errors import ParameterRangeError
from ..graphs.core import Graph
from ..models.spectrum import Spectrum
from .solver import eigenvalues

logger = logging.getLogger(__name__)

PERRON_TOLERANCE = 1e-9
WINDOW_SLACK_NOTE = "ignores O(1/sqrt(n)) slack"


class NonRegularError(ParameterRangeError):
    """Raised when a join side handed to the regular-join formula is not regular."""
    pass


@dataclass(frozen=True)
class RegularSide:
    """A k-regular graph described by degree, order and full spectrum."""

    degree: int
    order: int
    spectrum: Tuple[float, ...]

    def validate(self) -> None:
        if self.order < 1:
            raise ValueError("a join side needs at least one vertex")
        if not 0 <= self.degree <= self.order - 1:
            raise NonRegularError(f"degree {self.degree} impossible on {self.order} vertices")
        if len(self.spectrum) != self.order:
            raise ValueError(f"expected {self.order} eigenvalues, got {len(self.spectrum)}")
        if abs(max(self.spectrum) - self.degree) > PERRON_TOLERANCE:
            raise NonRegularError(
                f"largest eigenvalue {max(self.spectrum)} differs from degree {self.degree}"
            )


def regular_side(g: Graph, method: str = "lapack") -> RegularSide:
    """Describe a regular graph as a join side.

    Raises:
        NonRegularError: If ``g`` is not regular
    """
    degree = g.is_regular()
    if degree is None:
        raise NonRegularError(f"graph with degrees {sorted(set(g.degrees()))} is not regular")
    return RegularSide(degree, g.n, eigenvalues(g, method=method).eigenvalues)


def empty_side(m: int) -> RegularSide:
    """mP₁ in closed form."""
    if m < 1:
        raise ParameterRangeError(f"m must be positive, got {m}")
    return RegularSide(0, m, (0.0,) * m)


def clique_union_side(q: int, t: int) -> RegularSide:
    """qK_t in closed form: t−1 with multiplicity q, −1 with multiplicity q(t−1)."""
    if q < 1 or t < 1:
        raise ParameterRangeError(f"q and t must be positive, got q={q}, t={t}")
    return RegularSide(t - 1, q * t, (float(t - 1),) * q + (-1.0,) * (q * (t - 1)))


def _drop_perron(side: RegularSide) -> List[float]:
    values = list(side.spectrum)
    index = min(range(len(values)), key=lambda i: abs(values[i] - side.degree))
    del values[index]
    return values


def join_regular_spectrum(left: RegularSide, right: RegularSide) -> Spectrum:
    """Spectrum of G ∨ H for a k-regular G on m vertices and an l-regular H on n vertices.

    Every non-Perron eigenvalue of either side survives; the two Perron values
    are replaced by the roots of (x − k)(x − l) = mn.

    Args:
        left: The k-regular side
        right: The l-regular side

    Returns:
        Spectrum: The join spectrum

    Raises:
        NonRegularError: If a side's spectrum is inconsistent with its degree
    """
    left.validate()
    right.validate()
    k, m = left.degree, left.order
    l, n = right.degree, right.order
    root = math.sqrt((k - l) ** 2 + 4 * m * n)
    values = _drop_perron(left) + _drop_perron(right)
    values.extend([(k + l + root) / 2.0, (k + l - root) / 2.0])
    return Spectrum(tuple(sorted(values, reverse=True)))


def join_graph_spectrum(g: Graph, h: Graph, method: str = "lapack") -> Spectrum:
    """join_regular_spectrum for two explicit regular graphs."""
    return join_regular_spectrum(regular_side(g, method), regular_side(h, method))


def kst_spread_closed_form(s: int, t: int, q: int) -> float:
    """Spread of (s−1)K₁ ∨ qK_t, which is √((t−1)² + 4(s−1)qt).

    Raises:
        ParameterRangeError: Unless s ≥ 2, t ≥ 1 and q ≥ 1
    """
    if s < 2 or t < 1:
        raise ParameterRangeError(f"need s ≥ 2 and t ≥ 1, got s={s}, t={t}")
    if q < 1:
        raise ParameterRangeError(f"the clique side must be non-empty (n ≥ s), got q={q}")
    return math.sqrt((t - 1) ** 2 + 4 * (s - 1) * q * t)


def _check_pair(s: int, t: int) -> None:
    if not 2 <= s <= t:
        raise ParameterRangeError(f"need t ≥ s ≥ 2, got s={s}, t={t}")


def tait_bound(s: int, t: int, n: int) -> float:
    """Spectral radius ceiling for K_{s,t}-minor-free graphs on n vertices.

    Raises:
        ParameterRangeError: Unless t ≥ s ≥ 2 and n ≥ s + t
    """
    _check_pair(s, t)
    if n < s + t:
        raise ParameterRangeError(f"need n ≥ s+t = {s + t}, got n={n}")
    return (s + t - 3 + math.sqrt((t - s + 1) ** 2 + 4 * (s - 1) * (n - s + 1))) / 2.0


@dataclass(frozen=True)
class LambdaWindow:
    """Asymptotic window for |λₙ| of the maximum-spread graph. Diagnostic only."""

    s: int
    t: int
    n: int
    low: float
    high: float
    note: str = WINDOW_SLACK_NOTE

    @property
    def center(self) -> float:
        return (self.low + self.high) / 2.0

    def contains(self, value: float, slack: float = 0.0) -> bool:
        return self.low - slack <= value <= self.high + slack

    def to_dict(self) -> Dict[str, object]:
        return {
            's': self.s,
            't': self.t,
            'n': self.n,
            'low': self.low,
            'high': self.high,
            'note': self.note
        }


def lambdan_window(s: int, t: int, n: int) -> LambdaWindow:
    """(√a₀ − (s+t−3)/2, √a₀ + (s+t−3)/2) with a₀ = (s−1)(n−s+1)."""
    _check_pair(s, t)
    if n < s:
        raise ParameterRangeError(f"need n ≥ s, got n={n}")
    center = math.sqrt((s - 1) * (n - s + 1))
    half = (s + t - 3) / 2.0
    return LambdaWindow(s, t, n, center - half, center + half)


def spread_lower_bound(s: int, t: int, n: int) -> float:
    """Interlacing lower bound on the maximum spread.

    (s−1)K₁ ∨ qK_t with q = ⌊(n−s+1)/t⌋ is an induced subgraph of the full
    construction, so its spread bounds the maximum from below.
    """
    _check_pair(s, t)
    q = (n - s + 1) // t
    if q < 1:
        raise ParameterRangeError(f"n={n} leaves no room for a K_{t} block")
    return kst_spread_closed_form(s, t, q)


def window_check(
    g: Graph,
    s: int,
    t: int,
    slack: float = 1.0,
    spectrum: Optional[Spectrum] = None
) -> Dict[str, object]:
    """Report where λ₁ and |λₙ| of ``g`` sit relative to the widened λₙ window."""
    spectrum = spectrum or eigenvalues(g)
    window = lambdan_window(s, t, g.n)
    abs_smallest = abs(spectrum.smallest)
    report = {
        'window': window.to_dict(),
        'slack': slack,
        'lambda_1': spectrum.largest,
        'abs_lambda_n': abs_smallest,
        'lambda_n_inside': window.contains(abs_smallest, slack),
        'lambda_1_at_least_low': spectrum.largest >= window.low - slack,
    }
    if not report['lambda_n_inside']:
        logger.debug("|λn| outside widened window", extra={'extra_data': report})
    return report
