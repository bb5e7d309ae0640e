"""Catalogue of the acceptance criteria.

Each criterion carries a number, a short name, a description and the
runtime budget it is expected to finish within.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence


@dataclass(frozen=True)
class Criterion:
    """One acceptance criterion."""

    number: int
    name: str
    description: str
    budget_seconds: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'number': self.number,
            'name': self.name,
            'description': self.description,
            'budget_seconds': self.budget_seconds
        }


CRITERIA: List[Criterion] = [
    Criterion(
        number=1,
        name="star_of_cliques_closed_form",
        description=(
            "spread((s−1)P₁ ∨ qK_t) equals √((t−1)²+4(s−1)qt) within 1e-9 "
            "for 2 ≤ s ≤ t ≤ 5, 1 ≤ q ≤ 8"
        ),
        budget_seconds=10.0,
    ),
    Criterion(
        number=2,
        name="join_spectrum",
        description=(
            "join_regular_spectrum matches the dense solver within 1e-9 "
            "on 200 random regular pairs of total order ≤ 20"
        ),
        budget_seconds=30.0,
    ),
    Criterion(
        number=3,
        name="c2_identity",
        description="c₂ rewriting residual ≤ 1e-12 on 200 random (L, R, t)",
        budget_seconds=10.0,
    ),
    Criterion(
        number=4,
        name="expansion_convergence",
        description=(
            "|exact − approx| at ℓ = round(ℓ₁) shrinks by a factor ≥ 8 per doubling "
            "of n ∈ {200, 400, 800, 1600} for (2,2) and (3,4)"
        ),
        budget_seconds=5.0,
    ),
    Criterion(
        number=5,
        name="admissibility_table",
        description=(
            "degree-sequence maximization agrees with t ≥ (3/2)(s−3)+4/(s−1) for "
            "3 ≤ s ≤ 8, s ≤ t ≤ 3s; (8,8) is the only non-admissible pair with t ≤ 8; "
            "ψ(K_{1,6}) = 6/7 at t = 8"
        ),
        budget_seconds=60.0,
    ),
    Criterion(
        number=6,
        name="cubic_oracle",
        description=(
            "trigonometric roots have residual ≤ 1e-9·max(1, p^{3/2}) and the spread "
            "is strictly decreasing in |q| on a 10⁴-point grid"
        ),
        budget_seconds=5.0,
    ),
    Criterion(
        number=7,
        name="ell_zero_agreement",
        description=(
            "ell_zero's candidates equal scan_ell's argmax for admissible s ≤ 4, t ≤ 6, "
            "n ∈ 30..64 whenever the top-two gap exceeds 1e-9"
        ),
        budget_seconds=300.0,
    ),
    Criterion(
        number=8,
        name="minor_soundness",
        description=(
            "every positive minor answer carries a valid witness and has_minor agrees "
            "with partition enumeration for n ≤ 6, H ∈ {K_{2,2}, K_{1,3}, K_{2,3}}"
        ),
        budget_seconds=300.0,
    ),
    Criterion(
        number=9,
        name="search_consistency",
        description=(
            "every K_{2,2}-minor-free class on n ≤ 7 vertices satisfies the spectral "
            "radius bound and the (1/2)(t+1)(n−1) edge bound"
        ),
        budget_seconds=600.0,
    ),
]


def get_criteria() -> List[Criterion]:
    """Get every acceptance criterion in order.

    Returns:
        List of criteria
    """
    return list(CRITERIA)


def get_criterion(number: int) -> Criterion:
    """Get a criterion by number.

    Args:
        number: Criterion number (1-based)

    Returns:
        The criterion

    Raises:
        ValueError: If no criterion has that number
    """
    for criterion in CRITERIA:
        if criterion.number == number:
            return criterion
    raise ValueError(f"Unknown criterion: {number}")


def select_criteria(numbers: Sequence[int]) -> List[Criterion]:
    """Get the criteria with the given numbers, in catalogue order."""
    wanted = set(numbers)
    for number in wanted:
        get_criterion(number)
    return [c for c in CRITERIA if c.number in wanted]
