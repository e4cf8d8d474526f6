"""Linear algebra helpers for orthogonal group elements."""

import numpy as np
from scipy import linalg

from config.settings import GROUP_TOL, RANK_RTOL, SPECTRUM_TOL
from utils.errors import DomainError


def orthogonality_residual(matrix: np.ndarray) -> float:
    """Max-entry residual of UᵀU − I."""
    matrix = np.asarray(matrix, dtype=float)
    return float(np.max(np.abs(matrix.T @ matrix - np.eye(matrix.shape[0]))))


def check_orthogonal(matrix: np.ndarray, tol: float = GROUP_TOL, name: str = "matrix") -> np.ndarray:
    """Return matrix as a float array after checking it is square and orthogonal.

    Raises:
        DomainError: 'not-orthogonal' if the residual exceeds tol.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DomainError("dimension-mismatch", f"{name} must be square, got shape {matrix.shape}.")
    residual = orthogonality_residual(matrix)
    if residual > tol:
        raise DomainError(
            "not-orthogonal",
            f"{name} has orthogonality residual {residual:.3e} > {tol:.1e}."
        )
    return matrix


def permutation_of(matrix: np.ndarray, tol: float = GROUP_TOL) -> np.ndarray | None:
    """Detect a 0/1 permutation matrix.

    Returns:
        Integer array perm with (U x) = x[perm], or None if matrix is not a
        permutation matrix within tol.
    """
    matrix = np.asarray(matrix, dtype=float)
    ones = np.abs(matrix - 1.0) <= tol
    zeros = np.abs(matrix) <= tol
    if not np.all(ones | zeros):
        return None
    if not (np.all(ones.sum(axis=0) == 1) and np.all(ones.sum(axis=1) == 1)):
        return None
    return np.argmax(ones, axis=1).astype(np.int64)


def real_spectrum(matrix: np.ndarray, tol: float = SPECTRUM_TOL) -> list[float]:
    """Real eigenvalues of an orthogonal matrix, deduplicated and snapped to ±1.

    Eigenvalues with |imag| <= tol * (1 + |λ|) count as real. Real eigenvalues
    of an orthogonal matrix are exactly ±1, so each one is snapped to the
    nearer sign.

    Raises:
        DomainError: 'not-orthogonal'.
    """
    matrix = check_orthogonal(matrix, tol=max(tol, GROUP_TOL))
    eigenvalues = linalg.eigvals(matrix)
    real = eigenvalues[np.abs(eigenvalues.imag) <= tol * (1.0 + np.abs(eigenvalues))].real
    return sorted({1.0 if value >= 0 else -1.0 for value in real}, reverse=True)


def numerical_rank(matrix: np.ndarray, rtol: float = RANK_RTOL) -> int:
    """Count singular values above rtol * σ_max; a matrix within rtol of zero has rank 0."""
    singular_values = linalg.svdvals(np.asarray(matrix, dtype=float))
    sigma_max = singular_values[0] if singular_values.size else 0.0
    if sigma_max <= rtol:
        return 0
    return int(np.sum(singular_values > rtol * sigma_max))


def rank_at(matrix: np.ndarray, lam: float, rtol: float = RANK_RTOL) -> int:
    """Numerical rank of U − λI."""
    matrix = np.asarray(matrix, dtype=float)
    return numerical_rank(matrix - lam * np.eye(matrix.shape[0]), rtol=rtol)


def min_rank_over_spectrum(matrix: np.ndarray, rtol: float = RANK_RTOL) -> tuple[list[float], int]:
    """Return (Sp(U), min over λ ∈ Sp(U) of rank[U − λI]).

    When U has no real eigenvalue, U − λI is invertible for every real λ and
    the value is the dimension.
    """
    spectrum = real_spectrum(matrix)
    if not spectrum:
        return spectrum, int(np.asarray(matrix).shape[0])
    return spectrum, min(rank_at(matrix, lam, rtol=rtol) for lam in spectrum)
