"""Convergence of the truncated spread expansion along the ℓ₀ family."""

import logging
from typing import List, Optional, Sequence

import mpmath

from ..admissibility.psi import maximize_psi
from ..expansion.coefficients import c_coefficients, truncated_spread
from ..expansion.moments import star_clique_moments
from ..extremal.construction import NonAdmissiblePairError, ell_one, nearest_integers, two_term_spread
from ..extremal.cubic import family_spread_mp
from ..models.search import ConvergenceRow, ConvergenceTable
from ..observability import get_metrics_collector

logger = logging.getLogger(__name__)

DEFAULT_DPS = 50


def convergence_experiment(
    s: int,
    t: int,
    n_list: Sequence[int],
    dps: int = DEFAULT_DPS
) -> ConvergenceTable:
    """Exact spread vs. the four-term expansion at ℓ = round(ℓ₁) for each n.

    Exact values come from the reduced cubic (the family's extreme
    eigenvalues are its roots), both sides evaluated in mpmath at ``dps``
    digits so residuals near 1e-13 stay meaningful.

    Args:
        s: Minor parameter s
        t: Minor parameter t
        n_list: Orders, usually successive doublings
        dps: mpmath working precision

    Returns:
        ConvergenceTable: One row per n with residual ratios to the previous row

    Raises:
        NonAdmissiblePairError: If (s, t) is not admissible
    """
    report = maximize_psi(s, t)
    if not report.admissible:
        get_metrics_collector().record_refusal("non_admissible")
        raise NonAdmissiblePairError(f"(s,t)=({s},{t}) is not admissible")

    rows: List[ConvergenceRow] = []
    previous: Optional[float] = None
    with get_metrics_collector().timed("converge", f"s={s},t={t}"):
        for n in n_list:
            ell = nearest_integers(ell_one(s, t, n))[0]
            series = star_clique_moments(s, t, n, ell, order=6)
            with mpmath.workdps(dps):
                exact = family_spread_mp(s, t, n, ell, dps)
                approx = truncated_spread(series.a0, c_coefficients(series), dps=dps)
                residual = float(abs(exact - approx))
            exact_f = float(exact)
            formula_residual = abs(exact_f - two_term_spread(s, t, n, report.psi_max))
            ratio = previous / residual if previous is not None and residual > 0 else None
            row = ConvergenceRow(
                n=n,
                ell=ell,
                exact=exact_f,
                approx=float(approx),
                residual=residual,
                ratio=ratio,
                formula_residual=formula_residual,
                formula_constant=formula_residual * n ** 1.5,
                scaled_residual=residual * series.a0 ** 3.5,
            )
            logger.debug("convergence row", extra={'extra_data': row.to_dict()})
            rows.append(row)
            previous = residual
    return ConvergenceTable(s=s, t=t, rows=tuple(rows))
