from dataclasses import dataclass

import numpy as np

from utils.errors import DomainError
from utils.input_validation import check_points, validate_dimension


@dataclass(frozen=True, eq=False)
class Dataset:
    """A finite point set in ℝ^d with stable string ids.

    Attributes:
        dim: Ambient dimension d.
        points: Read-only (n, d) array.
        ids: One unique id per row.
        invariant_flag: True once the set is known to be closed under the action.
    """
    dim: int
    points: np.ndarray
    ids: tuple = ()
    invariant_flag: bool = False

    def __post_init__(self) -> None:
        validate_dimension(self.dim)
        points = check_points(self.points, self.dim).copy()
        points.setflags(write=False)
        object.__setattr__(self, 'points', points)

        ids = tuple(str(i) for i in self.ids) if self.ids else tuple(f"p{k}" for k in range(len(points)))
        if len(ids) != len(points):
            raise DomainError("dimension-mismatch", f"{len(ids)} ids given for {len(points)} points.")
        if len(set(ids)) != len(ids):
            raise DomainError("dimension-mismatch", "Point ids must be unique.")
        object.__setattr__(self, 'ids', ids)

    @classmethod
    def from_points(cls, points, ids=None, invariant_flag: bool = False) -> 'Dataset':
        points = np.asarray(points, dtype=float)
        if points.ndim != 2:
            raise DomainError("dimension-mismatch", f"Points must be a 2-D array, got shape {points.shape}.")
        return cls(dim=points.shape[1], points=points, ids=tuple(ids) if ids is not None else (), invariant_flag=invariant_flag)

    def __len__(self) -> int:
        return int(self.points.shape[0])

    def point(self, point_id: str) -> np.ndarray:
        return self.points[self.ids.index(point_id)]
