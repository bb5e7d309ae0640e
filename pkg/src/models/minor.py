"""Minor-search records."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple, Union
import json

Bound = Union[int, float]


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets of a minor model, one per vertex of H (in H's vertex order)."""

    branch_sets: Tuple[Tuple[int, ...], ...]

    def validate(self) -> None:
        """Check non-emptiness and disjointness (connectivity is checked against G).

        Raises:
            ValueError: If a branch set is empty or two sets overlap
        """
        seen = set()
        for index, branch in enumerate(self.branch_sets):
            if not branch:
                raise ValueError(f"branch set {index} is empty")
            overlap = seen.intersection(branch)
            if overlap:
                raise ValueError(f"branch set {index} reuses vertices {sorted(overlap)}")
            seen.update(branch)

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        return {'branch_sets': [list(branch) for branch in self.branch_sets]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MinorWitness':
        """Deserialize from dictionary."""
        return cls(branch_sets=tuple(tuple(branch) for branch in data['branch_sets']))

    @classmethod
    def from_masks(cls, masks: List[int]) -> 'MinorWitness':
        return cls(branch_sets=tuple(
            tuple(v for v in range(mask.bit_length()) if (mask >> v) & 1) for mask in masks
        ))

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class MinorResult:
    """Outcome of an H-minor search."""

    found: bool
    witness: Optional[MinorWitness] = None
    nodes: int = 0  # search-tree nodes visited

    def validate(self) -> None:
        if self.found != (self.witness is not None):
            raise ValueError("a witness is present exactly when a minor was found")
        if self.witness is not None:
            self.witness.validate()

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        return {
            'found': self.found,
            'witness': self.witness.to_dict()['branch_sets'] if self.witness else None,
            'nodes': self.nodes
        }

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class EdgeFilterVerdict:
    """One edge-count necessary condition for K_{s,t}-minor-freeness.

    Attributes:
        name: 'mader', 'kostochka_prince', 'crs' or 'bipartite'
        applicable: Whether the graph and (s, t) lie in the bound's hypothesis
        bound: Edge ceiling (None when not applicable)
        edges: |E(G)|
        verdict: 'pass', 'fail' (the count certifies a minor) or 'not_applicable'
        heuristic: True when the constant is user-supplied rather than proven
    """

    name: str
    applicable: bool
    bound: Optional[Bound]
    edges: int
    verdict: str
    heuristic: bool = False

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        return {
            'name': self.name,
            'applicable': self.applicable,
            'bound': self.bound,
            'edges': self.edges,
            'verdict': self.verdict,
            'heuristic': self.heuristic
        }
