from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from utils.errors import DomainError
from utils.input_validation import check_points, validate_dimension


@dataclass(frozen=True, eq=False)
class WindowBank:
    """The p-tuple of window vectors w = (w_1, ..., w_p) in ℝ^d.

    Attributes:
        dim: Ambient dimension d.
        windows: Read-only (p, d) array, one nonzero window per row.
    """
    dim: int
    windows: np.ndarray

    def __post_init__(self) -> None:
        validate_dimension(self.dim)
        windows = check_points(self.windows, self.dim, name="windows")
        if windows.shape[0] == 0:
            raise DomainError("empty-selection", "A window bank needs at least one window.")
        norms = np.linalg.norm(windows, axis=1)
        if np.any(norms == 0):
            raise DomainError("zero-window", f"Windows {np.flatnonzero(norms == 0).tolist()} are zero.")
        windows = windows.copy()
        windows.setflags(write=False)
        object.__setattr__(self, 'windows', windows)

    @classmethod
    def from_vectors(cls, vectors) -> 'WindowBank':
        vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
        return cls(dim=vectors.shape[1], windows=vectors)

    @property
    def p(self) -> int:
        return int(self.windows.shape[0])

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.windows, axis=1)


@dataclass(frozen=True)
class SelectionSet:
    """Per-window coorbit ranks S_i ⊂ {1, ..., N}, stored 1-based and ascending.

    Attributes:
        per_window: Tuple of p strictly increasing rank tuples.
    """
    per_window: tuple

    def __post_init__(self) -> None:
        normalized = []
        for i, ranks in enumerate(self.per_window):
            ranks = tuple(int(r) for r in ranks)
            if not ranks:
                raise DomainError("empty-selection", f"S_{i + 1} is empty.")
            if any(r < 1 for r in ranks):
                raise DomainError("rank-out-of-range", f"S_{i + 1} has a rank below 1: {ranks}.")
            if any(a >= b for a, b in zip(ranks, ranks[1:])):
                raise DomainError(
                    "selection-shape-mismatch",
                    f"S_{i + 1} must be strictly increasing, got {ranks}."
                )
            normalized.append(ranks)
        if not normalized:
            raise DomainError("empty-selection", "A selection needs at least one window.")
        object.__setattr__(self, 'per_window', tuple(normalized))

    @classmethod
    def from_lists(cls, lists) -> 'SelectionSet':
        """Build from any iterables of ranks, sorting each ascending."""
        return cls(per_window=tuple(tuple(sorted(set(int(r) for r in ranks))) for ranks in lists))

    @classmethod
    def singletons(cls, p: int, rank: int = 1) -> 'SelectionSet':
        """S_i = {rank} for every window; rank 1 is the max filter."""
        return cls(per_window=tuple((rank,) for _ in range(p)))

    @property
    def p(self) -> int:
        return len(self.per_window)

    @property
    def m(self) -> int:
        """Total number of selected coordinates Σ|S_i|."""
        return sum(len(ranks) for ranks in self.per_window)

    @property
    def sizes(self) -> tuple:
        return tuple(len(ranks) for ranks in self.per_window)

    @property
    def max_rank(self) -> int:
        return max(ranks[-1] for ranks in self.per_window)

    def check_compatible(self, p: int, order: int) -> None:
        """Check the selection fits p windows and a group of the given order.

        Raises:
            DomainError: 'selection-shape-mismatch' or 'rank-out-of-range'.
        """
        if self.p != p:
            raise DomainError(
                "selection-shape-mismatch",
                f"Selection has {self.p} rank lists but the bank has {p} windows."
            )
        if self.max_rank > order:
            raise DomainError(
                "rank-out-of-range",
                f"Selection uses rank {self.max_rank} but the group has order {order}."
            )


@dataclass(frozen=True, eq=False)
class CoorbitVector:
    """A sorted coorbit ↓(⟨U_g w, x⟩)_{g∈G}.

    Attributes:
        values: Non-increasing N-vector.
        order: Element indices in coorbit order (stable on ties).
        provenance: Optional (window index, point id).
    """
    values: np.ndarray
    order: np.ndarray | None = None
    provenance: tuple | None = None

    def __post_init__(self) -> None:
        if np.any(np.diff(self.values) > 0):
            raise ValueError("Coorbit values must be non-increasing")

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def __getitem__(self, j: int) -> float:
        return float(self.values[j])


class InvariantMap(ABC):
    """Base class for G-invariant feature maps ℝ^d → ℝ^k.

    Subclasses implement transform() for one point and declare output_dim.
    transform_many() evaluates a stack of points; override it when a
    vectorized path exists.
    """

    @property
    @abstractmethod
    def dim(self) -> int:
        """Input dimension d."""
        pass

    @property
    @abstractmethod
    def output_dim(self) -> int:
        """Length of each feature vector."""
        pass

    @abstractmethod
    def transform(self, x) -> np.ndarray:
        """Map one point of ℝ^d to its feature vector.

        Args:
            x: Vector of length dim.

        Returns:
            np.ndarray of length output_dim.
        """
        pass

    def transform_many(self, points) -> np.ndarray:
        """Map a (n, d) stack of points to an (n, output_dim) matrix."""
        points = check_points(points, self.dim)
        if points.shape[0] == 0:
            return np.zeros((0, self.output_dim))
        return np.vstack([self.transform(x) for x in points])
