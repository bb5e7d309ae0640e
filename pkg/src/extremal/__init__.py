"""Cubic eigenvalue equation, ℓ₀ optimizer and exact ℓ scans."""

from .construction import (
    SCAN_METHODS,
    NonAdmissiblePairError,
    agreement,
    ell_one,
    ell_zero,
    ell_zero_asymptotic,
    nearest_integers,
    scan_ell,
    two_term_spread,
    xi_interval,
)
from .cubic import (
    DiscriminantError,
    cubic_alpha,
    cubic_coefficients,
    cubic_params,
    cubic_roots,
    cubic_spread,
    cubic_spread_mp,
    discriminant_ok,
    family_spread,
    family_spread_mp,
)

__all__ = [
    'DiscriminantError',
    'NonAdmissiblePairError',
    'SCAN_METHODS',
    'agreement',
    'cubic_alpha',
    'cubic_coefficients',
    'cubic_params',
    'cubic_roots',
    'cubic_spread',
    'cubic_spread_mp',
    'discriminant_ok',
    'ell_one',
    'ell_zero',
    'ell_zero_asymptotic',
    'family_spread',
    'family_spread_mp',
    'nearest_integers',
    'scan_ell',
    'two_term_spread',
    'xi_interval',
]
