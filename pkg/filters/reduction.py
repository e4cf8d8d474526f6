from dataclasses import dataclass

import numpy as np

from utils.errors import DomainError
from utils.input_validation import check_points, check_vector
from utils.linalg import numerical_rank


@dataclass(frozen=True, eq=False)
class LinearReduction:
    """The linear map ℓ : ℝ^m → ℝ^{2d}, stored as a (2d, m) matrix.

    Attributes:
        in_dim: m, the coorbit map output length.
        out_dim: Target length, 2d for a sampled reduction.
        matrix: Read-only (out_dim, in_dim) array.
        seed: Seed the matrix was drawn from, None for hand-built maps.
    """
    in_dim: int
    out_dim: int
    matrix: np.ndarray
    seed: int | None = None

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=float)
        if matrix.shape != (self.out_dim, self.in_dim):
            raise DomainError(
                "config-inconsistent",
                f"Reduction matrix has shape {matrix.shape}, "
                f"declared ({self.out_dim}, {self.in_dim})."
            )
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @classmethod
    def from_matrix(cls, matrix, seed: int | None = None) -> 'LinearReduction':
        matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
        return cls(in_dim=matrix.shape[1], out_dim=matrix.shape[0], matrix=matrix, seed=seed)

    @property
    def is_injective(self) -> bool:
        return numerical_rank(self.matrix) == self.in_dim

    def apply(self, v) -> np.ndarray:
        return self.matrix @ check_vector(v, self.in_dim, name="v")

    def apply_many(self, rows) -> np.ndarray:
        rows = check_points(rows, self.in_dim, name="rows")
        return rows @ self.matrix.T
