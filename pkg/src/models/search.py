"""Exhaustive-search and convergence records."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple
import json


@dataclass(frozen=True)
class SearchRecord:
    """Maximum spread over the K_{s,t}-minor-free classes on n vertices.

    Attributes:
        n: Order
        s: Minor parameter s
        t: Minor parameter t
        best_graphs: Canonical codes (hex) of every class attaining best_spread
        best_graph6: graph6 strings of the same classes
        best_spread: Largest spread in the census
        runner_up_gap: best_spread minus the best non-tied spread (None if no runner-up)
        census_size: Minor-free classes examined
        examined: All classes enumerated
        winner_in_family: Whether the first winner is L ∨ (ℓK_t ∪ mP₁)
        winner_ell: ℓ of the winner when it is in the family
        tait_violations: Minor-free classes whose λ₁ exceeds the spectral radius ceiling
        crs_violations: Minor-free classes above the s = 2 edge ceiling
        filter_skips: Classes rejected by an edge filter without an exact search
        winner_checks: Window, ceiling and filter diagnostics for the winner
    """

    n: int
    s: int
    t: int
    best_graphs: Tuple[str, ...]
    best_graph6: Tuple[str, ...]
    best_spread: float
    runner_up_gap: Optional[float]
    census_size: int
    examined: int
    winner_in_family: bool
    winner_ell: Optional[int] = None
    tait_violations: int = 0
    crs_violations: int = 0
    filter_skips: int = 0
    winner_checks: Dict[str, Any] = field(default_factory=dict)

    def validate(self) -> None:
        """Check the census bookkeeping.

        Raises:
            ValueError: If counts or the gap are inconsistent
        """
        if self.census_size > self.examined:
            raise ValueError("census cannot exceed the number of examined classes")
        if self.runner_up_gap is not None and self.runner_up_gap < 0:
            raise ValueError("runner-up gap must be non-negative")
        if self.census_size and not self.best_graphs:
            raise ValueError("a non-empty census needs at least one winner")
        if len(self.best_graphs) != len(self.best_graph6):
            raise ValueError("best_graphs and best_graph6 must align")

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        return {
            'n': self.n,
            's': self.s,
            't': self.t,
            'best_graphs': list(self.best_graphs),
            'best_graph6': list(self.best_graph6),
            'best_spread': self.best_spread,
            'runner_up_gap': self.runner_up_gap,
            'census_size': self.census_size,
            'examined': self.examined,
            'winner_in_family': self.winner_in_family,
            'winner_ell': self.winner_ell,
            'tait_violations': self.tait_violations,
            'crs_violations': self.crs_violations,
            'filter_skips': self.filter_skips,
            'winner_checks': self.winner_checks
        }

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict(), default=str)


@dataclass(frozen=True)
class ConvergenceRow:
    """Exact vs. truncated spread of the ℓ₀ construction at one order."""

    n: int
    ell: int
    exact: float
    approx: float
    residual: float
    ratio: Optional[float]
    formula_residual: float
    formula_constant: float
    scaled_residual: float

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        return {
            'n': self.n,
            'ell': self.ell,
            'exact': self.exact,
            'approx': self.approx,
            'residual': self.residual,
            'ratio': self.ratio,
            'formula_residual': self.formula_residual,
            'formula_constant': self.formula_constant,
            'scaled_residual': self.scaled_residual
        }


@dataclass(frozen=True)
class ConvergenceTable:
    """Residuals over a list of orders for one pair (s, t)."""

    s: int
    t: int
    rows: Tuple[ConvergenceRow, ...]

    @property
    def ratios(self) -> List[float]:
        return [row.ratio for row in self.rows if row.ratio is not None]

    @property
    def min_ratio(self) -> Optional[float]:
        return min(self.ratios) if self.ratios else None

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        return {
            's': self.s,
            't': self.t,
            'rows': [row.to_dict() for row in self.rows],
            'min_ratio': self.min_ratio
        }

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())
