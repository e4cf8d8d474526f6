import numpy as np
from sklearn.utils import check_array

from config.settings import MIN_DIM
from utils.errors import DomainError, ParseError


def validate_dimension(dim: int, minimum: int = MIN_DIM) -> int:
    """
    Validate an ambient dimension.

    Raises:
        DomainError: 'dimension-too-small' if dim < minimum.
    """
    if int(dim) != dim or dim < minimum:
        raise DomainError(
            "dimension-too-small",
            f"Dimension must be an integer >= {minimum}, got {dim}."
        )
    return int(dim)


def validate_tolerance(tol, name: str = "tol") -> float:
    """
    Validate a matrix or point equality tolerance.

    Raises:
        ParseError: If tol is not a number.
        DomainError: 'tolerance-out-of-range' if tol is negative or not finite.
    """
    if isinstance(tol, bool) or not isinstance(tol, (int, float, np.floating, np.integer)):
        raise ParseError(f"'{name}' must be a number, got {tol!r}.")
    if not np.isfinite(tol) or tol < 0:
        raise DomainError(
            "tolerance-out-of-range",
            f"'{name}' must be finite and nonnegative, got {tol}."
        )
    return float(tol)


def validate_cap(n_max, name: str = "n_max") -> int:
    """
    Validate a group order cap.

    Raises:
        ParseError: If n_max is not an integer.
        DomainError: 'cap-out-of-range' if n_max < 1.
    """
    if isinstance(n_max, bool) or not isinstance(n_max, (int, np.integer)):
        raise ParseError(f"'{name}' must be an integer, got {n_max!r}.")
    if n_max < 1:
        raise DomainError("cap-out-of-range", f"'{name}' must be >= 1, got {n_max}.")
    return int(n_max)


def check_vector(x, dim: int, name: str = "x") -> np.ndarray:
    """
    Coerce x to a finite float64 vector of length dim.

    Raises:
        DomainError: 'dimension-mismatch' on wrong length or shape.
    """
    try:
        arr = check_array(np.asarray(x, dtype=float).reshape(1, -1), ensure_2d=True)[0]
    except ValueError as e:
        raise DomainError("dimension-mismatch", f"'{name}' is not a finite vector: {e}") from e
    if np.ndim(x) != 1 or arr.shape[0] != dim:
        raise DomainError(
            "dimension-mismatch",
            f"'{name}' must have length {dim}, got shape {np.shape(x)}."
        )
    return arr


def check_points(points, dim: int, name: str = "points") -> np.ndarray:
    """
    Coerce a stack of points to a finite (n, dim) float64 matrix.

    Empty input returns a (0, dim) matrix.

    Raises:
        DomainError: 'dimension-mismatch' if rows do not have length dim.
    """
    arr = np.asarray(points, dtype=float)
    if arr.size == 0:
        return np.zeros((0, dim))
    try:
        arr = check_array(arr, ensure_2d=True)
    except ValueError as e:
        raise DomainError("dimension-mismatch", f"'{name}' is not a finite matrix: {e}") from e
    if arr.shape[1] != dim:
        raise DomainError(
            "dimension-mismatch",
            f"'{name}' rows must have length {dim}, got {arr.shape[1]}."
        )
    return arr


def check_index(index: int, size: int, name: str = "index") -> int:
    """
    Validate a 0-based index into a collection of the given size.

    Raises:
        DomainError: 'index-out-of-range'.
    """
    if int(index) != index or not 0 <= index < size:
        raise DomainError(
            "index-out-of-range",
            f"'{name}' must be in [0, {size}), got {index}."
        )
    return int(index)
