"""The ψ objective, its maximization and the admissibility verdicts.

ψ(L) = 3Σd² − (2/(s−1))(Σd)² − (t−1)Σd over the degrees of a head graph L
on s−1 vertices. Everything here is exact rational arithmetic: admissibility
is decided by the sign of ψ and by exact zeros.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..config import get_config
from ..errors import ParameterRangeError
from ..graphs.core import Graph
from ..graphs.enumeration import enumerate_graphs
from ..models.admissibility import AdmissibilityRow, PsiReport
from ..models.degree_sequence import DegreeSequence
from ..observability import get_metrics_collector
from .degree_sequences import graphical_sequences, havel_hakimi

logger = logging.getLogger(__name__)

S2_NOTE = "s=2: the inequality reads t >= 5/2 but the one-vertex head gives psi=0 only"


class OrderMismatchError(ParameterRangeError):
    """Raised when a head graph does not have s−1 vertices."""
    pass


def psi_from_degrees(sum_d: int, sum_d2: int, s: int, t: int) -> Fraction:
    """ψ from the degree statistics Σd and Σd².

    Raises:
        ParameterRangeError: If s < 2
    """
    if s < 2:
        raise ParameterRangeError(f"need s ≥ 2, got s={s}")
    return 3 * sum_d2 - Fraction(2, s - 1) * sum_d * sum_d - (t - 1) * sum_d


def psi(head: Graph, s: int, t: int) -> Fraction:
    """ψ(L) for a head graph L on s−1 vertices.

    Raises:
        OrderMismatchError: If |L| ≠ s−1
    """
    if head.n != s - 1:
        raise OrderMismatchError(f"head has {head.n} vertices, expected s-1 = {s - 1}")
    degrees = head.degrees()
    return psi_from_degrees(sum(degrees), sum(d * d for d in degrees), s, t)


def _check_s(s: int, cap: Optional[int] = None) -> None:
    cap = get_config().psi_max_s if cap is None else cap
    if not 2 <= s <= cap:
        get_metrics_collector().record_refusal("psi_range")
        raise ParameterRangeError(f"maximize_psi supports 2 ≤ s ≤ {cap}, got s={s}")


def _verdict(psi_max: Fraction, optimal: List[DegreeSequence]) -> bool:
    return psi_max < 0 or (psi_max == 0 and all(seq.is_empty_graph() for seq in optimal))


def maximize_psi(s: int, t: int) -> PsiReport:
    """Maximize ψ over every graphical degree sequence on s−1 vertices.

    Args:
        s: Minor parameter s (2..psi_max_s)
        t: Minor parameter t

    Returns:
        PsiReport: Maximum, all optimal sequences and a Havel–Hakimi witness

    Raises:
        ParameterRangeError: If s is outside the supported range
    """
    _check_s(s)
    best: Optional[Fraction] = None
    optimal: List[DegreeSequence] = []
    for seq in graphical_sequences(s - 1):
        value = psi_from_degrees(seq.total, seq.sum_of_squares, s, t)
        if best is None or value > best:
            best, optimal = value, [seq]
        elif value == best:
            optimal.append(seq)
    witness = havel_hakimi(optimal[0].degrees)
    report = PsiReport(
        s=s,
        t=t,
        psi_max=best,
        optimal_degree_sequences=tuple(optimal),
        witness=witness,
        admissible=_verdict(best, optimal),
    )
    logger.debug(
        "psi maximized",
        extra={'extra_data': {'s': s, 't': t, 'psi_max': best, 'optimal': len(optimal)}}
    )
    return report


def maximize_psi_bruteforce(s: int, t: int) -> PsiReport:
    """Maximize ψ over all isomorphism classes of graphs on s−1 vertices.

    Independent of the degree-sequence path; limited by the enumeration cap.
    """
    _check_s(s, cap=get_config().enum_max_n + 1)
    best: Optional[Fraction] = None
    witnesses: List[Graph] = []
    for head in enumerate_graphs(s - 1):
        value = psi(head, s, t)
        if best is None or value > best:
            best, witnesses = value, [head]
        elif value == best:
            witnesses.append(head)
    sequences = sorted({head.degree_sequence() for head in witnesses},
                       key=lambda seq: seq.degrees, reverse=True)
    return PsiReport(
        s=s,
        t=t,
        psi_max=best,
        optimal_degree_sequences=tuple(sequences),
        witness=witnesses[0],
        admissible=_verdict(best, sequences),
        method="graphs",
    )


def closed_form_threshold(s: int) -> Fraction:
    """(3/2)(s−3) + 4/(s−1)."""
    if s < 2:
        raise ParameterRangeError(f"need s ≥ 2, got s={s}")
    return Fraction(3, 2) * (s - 3) + Fraction(4, s - 1)


def admissible_closed_form(s: int, t: int) -> bool:
    """Closed-form admissibility test t ≥ (3/2)(s−3) + 4/(s−1).

    The one-vertex head at s = 2 only has ψ = 0, so that row is admissible
    regardless of the inequality; see closed_form_note.

    Raises:
        ParameterRangeError: Unless t ≥ s ≥ 2
    """
    if not 2 <= s <= t:
        raise ParameterRangeError(f"need t ≥ s ≥ 2, got s={s}, t={t}")
    if s == 2:
        return True
    return t >= closed_form_threshold(s)


def closed_form_note(s: int, t: int) -> str:
    """Flag the s = 2 rows where the raw inequality and the definition disagree."""
    if s == 2 and t < closed_form_threshold(2):
        return S2_NOTE
    return ""


def psi_star_formula(s: int, t: int) -> Fraction:
    """ψ(K_{1,s−2}) = 3(s−2)(s−1) − (8/(s−1))(s−2)² − 2(t−1)(s−2).

    Raises:
        ParameterRangeError: If s < 3
    """
    if s < 3:
        raise ParameterRangeError(f"need s ≥ 3, got s={s}")
    return 3 * (s - 2) * (s - 1) - Fraction(8, s - 1) * (s - 2) ** 2 - 2 * (t - 1) * (s - 2)


def psi_decaen_upper(sum_d: int, s: int, t: int) -> Fraction:
    """Upper bound on ψ(L) from the de Caen degree-square inequality.

    Raises:
        ParameterRangeError: If s < 3 (the head needs two vertices)
    """
    if s < 3:
        raise ParameterRangeError(f"need s ≥ 3, got s={s}")
    quadratic = Fraction(3, 2 * (s - 2)) - Fraction(2, s - 1)
    linear = Fraction(3 * (s - 3), 2) - (t - 1)
    return quadratic * sum_d * sum_d + linear * sum_d


@dataclass(frozen=True)
class DegreeSquareBounds:
    """Σd² against the de Caen and Das ceilings."""

    decaen: Fraction
    das: int
    actual: int

    def holds(self) -> bool:
        return self.actual <= self.decaen and self.actual <= self.das

    def to_dict(self) -> Dict[str, object]:
        return {'decaen': self.decaen, 'das': self.das, 'actual': self.actual}


def degree_square_bounds(g: Graph) -> DegreeSquareBounds:
    """de Caen e(2e/(n−1) + n−2) and Das 2e(d₁+dₙ) − n·d₁·dₙ for Σd².

    Raises:
        ParameterRangeError: If n < 2
    """
    if g.n < 2:
        raise ParameterRangeError("the de Caen bound needs n ≥ 2")
    degrees = g.degrees()
    e = sum(degrees) // 2
    d_max, d_min = max(degrees), min(degrees)
    decaen = e * (Fraction(2 * e, g.n - 1) + g.n - 2)
    das = 2 * e * (d_max + d_min) - g.n * d_max * d_min
    return DegreeSquareBounds(decaen=decaen, das=das, actual=sum(d * d for d in degrees))


def _table_row(s: int, t: int, brute_force: bool) -> AdmissibilityRow:
    report = maximize_psi(s, t)
    bf_verdict = None
    if brute_force and s - 1 <= get_config().enum_max_n:
        bf_verdict = maximize_psi_bruteforce(s, t).admissible
    return AdmissibilityRow(
        s=s,
        t=t,
        closed_form=admissible_closed_form(s, t),
        degree_path=report.admissible,
        psi_max=report.psi_max,
        brute_force=bf_verdict,
        note=closed_form_note(s, t),
    )


def admissibility_table(
    s_max: int,
    t_max: int,
    brute_force: bool = False,
    threads: Optional[int] = None
) -> List[AdmissibilityRow]:
    """Admissibility verdicts for every 2 ≤ s ≤ s_max, s ≤ t ≤ t_max.

    Args:
        s_max: Largest s
        t_max: Largest t
        brute_force: Also run the graph-enumeration path where the cap allows
        threads: Worker count (defaults to the configured pool size)

    Returns:
        Rows sorted by (s, t)
    """
    _check_s(s_max)
    pairs: List[Tuple[int, int]] = [
        (s, t) for s in range(2, s_max + 1) for t in range(s, t_max + 1)
    ]
    threads = threads or get_config().threads
    rows: List[AdmissibilityRow] = []
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = {executor.submit(_table_row, s, t, brute_force): (s, t) for s, t in pairs}
        for future in as_completed(futures):
            rows.append(future.result())
    rows.sort(key=lambda row: (row.s, row.t))
    disagreements = [(row.s, row.t) for row in rows if not row.agree]
    if disagreements:
        logger.warning(
            "admissibility verdicts disagree",
            extra={'extra_data': {'pairs': disagreements}}
        )
    return rows
