"""Extremal-construction records: reduced cubic, ℓ₀ construction and ℓ scans."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, Optional, Tuple
import json
import math

from .rational import rational_to_dict

if TYPE_CHECKING:
    from ..graphs.core import Graph


@dataclass(frozen=True)
class CubicParams:
    """Reduced cubic x³ − px + q = 0 and its trigonometric solution.

    Attributes:
        p: Coefficient p (float rendering of p_exact when built from (s,t,n,ℓ))
        q: Coefficient q
        discriminant_ok: p³ > (27/4)q², i.e. three distinct real roots
        alpha: (1/3)·arccos(−(|q|/2)/(p/3)^{3/2}), in [π/6, π/3)
        roots: The three real roots, descending
        spread: Largest minus smallest root
        shift: λ = x + shift maps reduced roots back to eigenvalues
        p_exact: Exact p when known
        q_exact: Exact q when known
    """

    p: float
    q: float
    discriminant_ok: bool
    alpha: float
    roots: Tuple[float, float, float]
    spread: float
    shift: Fraction = Fraction(0)
    p_exact: Optional[Fraction] = None
    q_exact: Optional[Fraction] = None

    @property
    def lambda_roots(self) -> Tuple[float, float, float]:
        """Roots of the unreduced cubic in λ."""
        return tuple(x + float(self.shift) for x in self.roots)

    def max_residual(self) -> float:
        return max(abs(x ** 3 - self.p * x + self.q) for x in self.roots)

    def validate(self, tol: float = 1e-9) -> None:
        """Check the root residuals and the trigonometric spread.

        Raises:
            ValueError: If a root misses the cubic or the spread is inconsistent
        """
        if not self.discriminant_ok:
            raise ValueError("cubic does not have three distinct real roots")
        scale = max(1.0, self.p ** 1.5)
        if self.max_residual() > tol * scale:
            raise ValueError(f"root residual {self.max_residual()} exceeds {tol * scale}")
        if abs((self.roots[0] - self.roots[2]) - self.spread) > tol * scale:
            raise ValueError("spread differs from the root range")
        trig = 2 * math.sqrt(self.p) * math.sin(self.alpha + math.pi / 3)
        if abs(trig - self.spread) > tol * max(1.0, self.spread):
            raise ValueError("spread differs from 2√p·sin(α+π/3)")

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        data = {
            'p': self.p,
            'q': self.q,
            'discriminant_ok': self.discriminant_ok,
            'alpha': self.alpha,
            'roots': list(self.roots),
            'lambda_roots': list(self.lambda_roots),
            'spread': self.spread,
            'shift': rational_to_dict(self.shift)
        }
        if self.p_exact is not None:
            data['p_exact'] = rational_to_dict(self.p_exact)
        if self.q_exact is not None:
            data['q_exact'] = rational_to_dict(self.q_exact)
        return data

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class ExtremalConstruction:
    """ℓ₀ construction (s−1)P₁ ∨ (ℓ₀K_t ∪ mP₁) for an admissible pair."""

    s: int
    t: int
    n: int
    ell_one: Fraction
    ell_candidates: Tuple[int, ...]
    exact_spreads: Tuple[float, ...]
    formula_spread: float
    spread_method: str
    graphs: Tuple["Graph", ...] = ()
    xi_intervals: Tuple[Tuple[int, int], ...] = ()
    xi_offset: Optional[int] = None

    @property
    def is_tie(self) -> bool:
        return len(self.ell_candidates) == 2

    def validate(self) -> None:
        """Check the rounding rule and the per-candidate bookkeeping.

        Raises:
            ValueError: If an invariant is violated
        """
        half = self.ell_one - math.floor(self.ell_one) == Fraction(1, 2)
        if half != self.is_tie:
            raise ValueError("two candidates appear iff ell_one is a half-integer")
        for ell in self.ell_candidates:
            if abs(ell - self.ell_one) > Fraction(1, 2):
                raise ValueError(f"candidate {ell} is not a nearest integer to {self.ell_one}")
        if len(self.exact_spreads) != len(self.ell_candidates):
            raise ValueError("one exact spread per candidate is required")
        if self.graphs and len(self.graphs) != len(self.ell_candidates):
            raise ValueError("graphs must be absent or one per candidate")

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        from ..graphs.graph6 import encode

        return {
            's': self.s,
            't': self.t,
            'n': self.n,
            'ell_one': rational_to_dict(self.ell_one),
            'ell_candidates': list(self.ell_candidates),
            'exact_spreads': list(self.exact_spreads),
            'formula_spread': self.formula_spread,
            'spread_method': self.spread_method,
            'graphs': [encode(g) for g in self.graphs],
            'xi_intervals': [list(pair) for pair in self.xi_intervals],
            'xi_offset': self.xi_offset
        }

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class ScanResult:
    """Exact spread of L ∨ (ℓK_t ∪ mP₁) for every feasible ℓ."""

    s: int
    t: int
    n: int
    method: str
    table: Tuple[Tuple[int, float], ...]
    best_ells: Tuple[int, ...]
    best_spread: float
    gap: float
    tie_tolerance: float = 1e-9
    unimodal: bool = True
    head: str = field(default="")

    @property
    def decisive(self) -> bool:
        return self.gap > self.tie_tolerance

    def validate(self) -> None:
        """Check the argmax bookkeeping.

        Raises:
            ValueError: If best_spread or the gap disagree with the table
        """
        if not self.table:
            raise ValueError("scan table is empty")
        if any(value > self.best_spread for _, value in self.table):
            raise ValueError("best_spread is below a tabulated spread")
        if self.gap < 0:
            raise ValueError("gap must be non-negative")

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        return {
            's': self.s,
            't': self.t,
            'n': self.n,
            'method': self.method,
            'head': self.head,
            'table': [{'ell': ell, 'spread': value} for ell, value in self.table],
            'best_ells': list(self.best_ells),
            'best_spread': self.best_spread,
            'gap': self.gap,
            'decisive': self.decisive,
            'unimodal': self.unimodal
        }

    def to_csv_rows(self):
        return [
            {'ell': ell, 'spread': value, 'best': ell in self.best_ells}
            for ell, value in self.table
        ]

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())
