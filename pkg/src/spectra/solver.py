"""Adjacency eigenvalues and spread.

The default path calls LAPACK's symmetric solver through numpy. A cyclic
Jacobi solver is kept as an independent implementation for cross-checks.
"""

import logging
import math
from typing import Optional

import numpy as np

from ..config import get_config
from ..errors import ComputationRefused, ConvergenceError
from ..graphs.core import Graph
from ..models.spectrum import Spectrum
from ..observability import get_metrics_collector

logger = logging.getLogger(__name__)

METHODS = ("lapack", "jacobi")


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm drops below tol·‖A‖_F.

    Args:
        matrix: Symmetric square matrix (not modified)
        tol: Relative off-diagonal tolerance
        max_sweeps: Sweep limit

    Returns:
        np.ndarray: Eigenvalues in no particular order

    Raises:
        ConvergenceError: If the sweep limit is reached
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    n = a.shape[0]
    norm = np.linalg.norm(a)
    if n == 1 or norm == 0.0:
        return np.diag(a).copy()
    threshold = tol * norm

    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, float(np.sum(a * a) - np.sum(np.diag(a) ** 2))))
        if off < threshold:
            return np.diag(a).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def symmetric_eigenvalues(matrix: np.ndarray, method: str = "lapack") -> Spectrum:
    """Spectrum of a dense symmetric matrix with the chosen solver."""
    if method not in METHODS:
        raise ValueError(f"Unknown eigen method: {method}")
    n = matrix.shape[0]
    if n > get_config().dense_max_n:
        raise ComputationRefused(
            f"dense solver is capped at n={get_config().dense_max_n}, got n={n}"
        )
    collector = get_metrics_collector()
    with collector.timed("eigen", f"{method}:n={n}"):
        if method == "lapack":
            values = np.linalg.eigvalsh(matrix)
        else:
            values = jacobi_eigenvalues(matrix)
    ordered = sorted((float(v) for v in values), reverse=True)
    return Spectrum(tuple(ordered))


def eigenvalues(g: Graph, method: str = "lapack") -> Spectrum:
    """All adjacency eigenvalues of ``g`` sorted non-increasing.

    Args:
        g: The graph
        method: 'lapack' (default) or 'jacobi'

    Returns:
        Spectrum: The spectrum
    """
    return symmetric_eigenvalues(g.adjacency_matrix(), method=method)


def spread(g: Graph, method: str = "lapack") -> float:
    """S(G) = λ₁ − λₙ."""
    return eigenvalues(g, method=method).spread


def spectral_radius(g: Graph, method: str = "lapack") -> float:
    return eigenvalues(g, method=method).largest


def check_spectrum(g: Graph, spectrum: Optional[Spectrum] = None) -> Spectrum:
    """Compute (if needed) and validate a spectrum against trace and 2|E|."""
    spectrum = spectrum or eigenvalues(g)
    spectrum.validate(edge_count=g.edge_count(), tol=1e-6)
    return spectrum
