"""Acceptance suite for the spread workbench.

This package checks the workbench against its acceptance criteria:
- closed-form spreads and the join-spectrum formula
- the c₂ rewriting and the expansion's convergence rate
- the admissibility table and the reduced-cubic oracle
- ℓ₀ agreement, minor-engine soundness and exhaustive-search consistency
"""

__version__ = "0.1.0"
