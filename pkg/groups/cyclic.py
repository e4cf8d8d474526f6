import numpy as np

from .base import GroupAction, GroupFamily
from utils.input_validation import validate_dimension


def shift_matrix(dim: int, k: int) -> np.ndarray:
    """Permutation matrix sending coordinate i to coordinate (i + k) mod dim."""
    matrix = np.zeros((dim, dim))
    for i in range(dim):
        matrix[(i + k) % dim, i] = 1.0
    return matrix


def build_cyclic_shift(d: int) -> GroupAction:
    """Cyclic group of the d coordinate shifts of ℝ^d.

    Element k is shift-by-k, which sends coordinate i to (i + k) mod d, so
    shift-by-1 maps (1, 2, 3, 4) to (4, 1, 2, 3). The identity is element 0.

    Raises:
        DomainError: 'dimension-too-small' if d < 2.
    """
    d = validate_dimension(d)
    matrices = [shift_matrix(d, k) for k in range(d)]
    labels = ["identity"] + [f"shift{k}" for k in range(1, d)]
    return GroupAction.from_matrices(matrices, labels=labels)


class CyclicShiftGroup(GroupFamily):
    """Coordinate rotations of ℝ^d, N = d."""

    def __init__(self, dim: int) -> None:
        self.dim = dim

    def build(self) -> GroupAction:
        return build_cyclic_shift(self.dim)
