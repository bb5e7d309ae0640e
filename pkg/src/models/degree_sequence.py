"""Degree sequence data model."""

from dataclasses import dataclass
from typing import Tuple
import json


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing degree sequence of a (possibly hypothetical) graph."""

    degrees: Tuple[int, ...]
    realizable: bool = False  # set once the graphical test has passed

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    @property
    def sum_of_squares(self) -> int:
        return sum(d * d for d in self.degrees)

    def is_empty_graph(self) -> bool:
        return all(d == 0 for d in self.degrees)

    def validate(self) -> None:
        """Validate degree sequence invariants."""
        if any(d < 0 for d in self.degrees):
            raise ValueError("degrees must be non-negative")
        if list(self.degrees) != sorted(self.degrees, reverse=True):
            raise ValueError("degrees must be non-increasing")
        if self.total % 2:
            raise ValueError("degree sum must be even")
        if self.degrees and self.degrees[0] > self.n - 1:
            raise ValueError(f"degree {self.degrees[0]} exceeds n-1 = {self.n - 1}")

    def to_dict(self) -> dict:
        """Serialize to dictionary."""
        return {
            'degrees': list(self.degrees),
            'realizable': self.realizable
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'DegreeSequence':
        """Deserialize from dictionary."""
        return cls(degrees=tuple(data['degrees']), realizable=data.get('realizable', False))

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())
