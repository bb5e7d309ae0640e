"""Spectrum data model."""

from dataclasses import dataclass
from typing import Optional, Tuple
import json


@dataclass(frozen=True)
class Spectrum:
    """Adjacency eigenvalues sorted non-increasing."""

    eigenvalues: Tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def largest(self) -> float:
        return self.eigenvalues[0]

    @property
    def smallest(self) -> float:
        return self.eigenvalues[-1]

    @property
    def spread(self) -> float:
        return self.eigenvalues[0] - self.eigenvalues[-1]

    def validate(self, edge_count: Optional[int] = None, tol: float = 1e-6) -> None:
        """Validate the trace and second-moment invariants.

        Args:
            edge_count: |E| of the source graph, enables the Σλ² = 2|E| check
            tol: Absolute tolerance for the second moment (trace uses tol/100)
        """
        if not self.eigenvalues:
            raise ValueError("spectrum is empty")
        if any(a < b for a, b in zip(self.eigenvalues, self.eigenvalues[1:])):
            raise ValueError("eigenvalues must be sorted non-increasing")
        trace = sum(self.eigenvalues)
        if abs(trace) > tol / 100:
            raise ValueError(f"trace {trace} is not zero")
        if edge_count is not None:
            second = sum(x * x for x in self.eigenvalues)
            if abs(second - 2 * edge_count) > tol:
                raise ValueError(f"sum of squares {second} differs from 2|E| = {2 * edge_count}")

    def to_dict(self) -> dict:
        """Serialize to dictionary."""
        return {
            'eigenvalues': list(self.eigenvalues),
            'spread': self.spread
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'Spectrum':
        """Deserialize from dictionary."""
        return cls(eigenvalues=tuple(data['eigenvalues']))

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())
