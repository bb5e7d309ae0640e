"""ψ-maximization and admissibility records."""

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, Optional, Tuple
import json

from .degree_sequence import DegreeSequence
from .rational import rational_from_dict, rational_to_dict

if TYPE_CHECKING:
    from ..graphs.core import Graph


def _psi_value(sum_d: int, sum_d2: int, s: int, t: int) -> Fraction:
    return 3 * sum_d2 - Fraction(2, s - 1) * sum_d * sum_d - (t - 1) * sum_d


@dataclass(frozen=True)
class PsiReport:
    """Maximum of ψ over graphs on s−1 vertices for a pair (s, t).

    Attributes:
        s: Minor parameter s (the head has s−1 vertices)
        t: Minor parameter t
        psi_max: Exact maximum of ψ
        optimal_degree_sequences: Every degree sequence attaining psi_max
        witness: One realization of the first optimal sequence
        admissible: ψ ≤ 0 with equality only for the empty head
        method: 'degree_sequences' or 'graphs'
    """

    s: int
    t: int
    psi_max: Fraction
    optimal_degree_sequences: Tuple[DegreeSequence, ...]
    witness: "Graph"
    admissible: bool
    method: str = "degree_sequences"

    def validate(self) -> None:
        """Check the witness value and the admissibility verdict.

        Raises:
            ValueError: If the record is inconsistent
        """
        if self.witness.n != self.s - 1:
            raise ValueError(f"witness has {self.witness.n} vertices, expected {self.s - 1}")
        degrees = self.witness.degrees()
        value = _psi_value(sum(degrees), sum(d * d for d in degrees), self.s, self.t)
        if value != self.psi_max:
            raise ValueError(f"witness ψ = {value} differs from psi_max = {self.psi_max}")
        if not self.optimal_degree_sequences:
            raise ValueError("at least one optimal degree sequence is required")
        expected = self.psi_max < 0 or (
            self.psi_max == 0
            and all(seq.is_empty_graph() for seq in self.optimal_degree_sequences)
        )
        if expected != self.admissible:
            raise ValueError("admissible flag disagrees with psi_max and the optimal sequences")

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        from ..graphs.graph6 import encode

        return {
            's': self.s,
            't': self.t,
            'psi_max': rational_to_dict(self.psi_max),
            'optimal_degree_sequences': [list(seq.degrees) for seq in self.optimal_degree_sequences],
            'witness': encode(self.witness),
            'admissible': self.admissible,
            'method': self.method
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PsiReport':
        """Deserialize from dictionary."""
        from ..graphs.graph6 import decode

        return cls(
            s=data['s'],
            t=data['t'],
            psi_max=rational_from_dict(data['psi_max']),
            optimal_degree_sequences=tuple(
                DegreeSequence(tuple(degrees), realizable=True)
                for degrees in data['optimal_degree_sequences']
            ),
            witness=decode(data['witness']),
            admissible=data['admissible'],
            method=data.get('method', 'degree_sequences')
        )

    def to_json(self) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class AdmissibilityRow:
    """One (s, t) cell of the admissibility table."""

    s: int
    t: int
    closed_form: bool
    degree_path: bool
    psi_max: Fraction
    brute_force: Optional[bool] = None
    note: str = ""

    @property
    def agree(self) -> bool:
        verdicts = {self.closed_form, self.degree_path}
        if self.brute_force is not None:
            verdicts.add(self.brute_force)
        return len(verdicts) == 1

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary."""
        return {
            's': self.s,
            't': self.t,
            'closed_form': self.closed_form,
            'degree_path': self.degree_path,
            'brute_force': self.brute_force,
            'psi_max': rational_to_dict(self.psi_max),
            'agree': self.agree,
            'note': self.note
        }

    def to_csv_row(self) -> Dict[str, Any]:
        """Flat row for CSV tables; verdicts rendered as yes/no."""
        def verdict(value: Optional[bool]) -> str:
            return "" if value is None else ("yes" if value else "no")

        return {
            's': self.s,
            't': self.t,
            'admissible': verdict(self.degree_path),
            'closed_form': verdict(self.closed_form),
            'brute_force': verdict(self.brute_force),
            'psi_max': str(self.psi_max),
            'agree': verdict(self.agree),
            'note': self.note
        }
