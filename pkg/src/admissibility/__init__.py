"""ψ maximization, admissibility verdicts and degree-square bounds."""

from .degree_sequences import (
    NotGraphicalError,
    count_graphical_sequences,
    graphical_sequences,
    havel_hakimi,
    is_graphical,
)
from .psi import (
    DegreeSquareBounds,
    OrderMismatchError,
    admissibility_table,
    admissible_closed_form,
    closed_form_note,
    closed_form_threshold,
    degree_square_bounds,
    maximize_psi,
    maximize_psi_bruteforce,
    psi,
    psi_decaen_upper,
    psi_from_degrees,
    psi_star_formula,
)

__all__ = [
    'DegreeSquareBounds',
    'NotGraphicalError',
    'OrderMismatchError',
    'admissibility_table',
    'admissible_closed_form',
    'closed_form_note',
    'closed_form_threshold',
    'count_graphical_sequences',
    'degree_square_bounds',
    'graphical_sequences',
    'havel_hakimi',
    'is_graphical',
    'maximize_psi',
    'maximize_psi_bruteforce',
    'psi',
    'psi_decaen_upper',
    'psi_from_degrees',
    'psi_star_formula',
]
