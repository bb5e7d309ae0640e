"""Walk-moment series and spread-expansion records."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple
import json
import math

from .rational import rational_from_dict, rational_to_dict

TRUNCATION_ORDER = "O(a0^(-7/2))"


@dataclass(frozen=True)
class MomentSeries:
    """Walk moments of the two sides of a complete join L ∨ R.

    Attributes:
        l: l_k = 1'A_L^k 1 for k = 0..K
        r: r_k = 1'A_R^k 1 for k = 0..K
        a: a_k = Σ_{j≤k} l_j r_{k−j}
        right_max_degree: Δ(R) when known; bounds the validity region |λ| > Δ(R)
    """

    l: Tuple[int, ...]
    r: Tuple[int, ...]
    a: Tuple[int, ...]
    right_max_degree: Optional[int] = None

    @property
    def order(self) -> int:
        """Truncation index K."""
        return len(self.a) - 1

    @property
    def a0(self) -> int:
        return self.a[0]

    def validate(self) -> None:
        """Check lengths, signs and the convolution identity.

        Raises:
            ValueError: If an invariant is violated
        """
        if not (len(self.l) == len(self.r) == len(self.a)) or not self.a:
            raise ValueError("l, r and a must have the same non-zero length")
        for name, values in (('l', self.l), ('r', self.r), ('a', self.a)):
            if any(not isinstance(v, int) or v < 0 for v in values):
                raise ValueError(f"{name} must hold non-negative integers")
        for k, value in enumerate(self.a):
            expected = sum(self.l[j] * self.r[k - j] for j in range(k + 1))
            if value != expected:
                raise ValueError(f"a_{k} = {value} breaks the convolution identity ({expected})")

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        return {
            'l': list(self.l),
            'r': list(self.r),
            'a': list(self.a),
            'right_max_degree': self.right_max_degree
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MomentSeries':
        """Deserialize from dictionary."""
        return cls(
            l=tuple(data['l']),
            r=tuple(data['r']),
            a=tuple(data['a']),
            right_max_degree=data.get('right_max_degree')
        )

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class ExpansionEstimate:
    """Four-term truncation of the spread expansion in powers of a₀^(-1/2)."""

    a0: int
    c2: Fraction
    c4: Fraction
    c6: Fraction
    approx_spread: float
    truncation_order: str = field(default=TRUNCATION_ORDER)

    def validate(self, tol: float = 1e-9) -> None:
        """Recompute the truncation from a₀ and the coefficients.

        Raises:
            ValueError: If approx_spread disagrees with the coefficients
        """
        if self.a0 <= 0:
            raise ValueError("a0 must be positive")
        root = math.sqrt(self.a0)
        expected = (
            2 * root
            + 2 * float(self.c2) / root
            + 2 * float(self.c4) / root ** 3
            + 2 * float(self.c6) / root ** 5
        )
        if abs(expected - self.approx_spread) > tol * max(1.0, abs(expected)):
            raise ValueError(f"approx_spread {self.approx_spread} != {expected}")

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        return {
            'a0': self.a0,
            'c2': rational_to_dict(self.c2),
            'c4': rational_to_dict(self.c4),
            'c6': rational_to_dict(self.c6),
            'approx_spread': self.approx_spread,
            'truncation_order': self.truncation_order
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ExpansionEstimate':
        """Deserialize from dictionary."""
        return cls(
            a0=data['a0'],
            c2=rational_from_dict(data['c2']),
            c4=rational_from_dict(data['c4']),
            c6=rational_from_dict(data['c6']),
            approx_spread=data['approx_spread'],
            truncation_order=data.get('truncation_order', TRUNCATION_ORDER)
        )

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())
