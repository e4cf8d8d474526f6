"""Approximate-equality lookup for flat float vectors."""

import itertools
import logging

import numpy as np

from config.settings import GRID_PITCH, GROUP_TOL, MAX_PROBE_COORDS

logger = logging.getLogger(__name__)


class ToleranceIndex:
    """Deduplicate vectors up to a max-entry distance tolerance.

    Keys are hashed on a rounding grid of pitch ``pitch``. A vector whose
    coordinates sit within ``tol`` of a cell boundary is also probed in the
    neighbouring cells along those coordinates, so two vectors within ``tol``
    of each other always meet. Candidates from the buckets are confirmed with
    an exact max-entry distance check.

    Attributes:
        tol: Max-entry distance under which two vectors are considered equal.
        pitch: Grid pitch used for hashing (must exceed 2 * tol). Defaults
            to the larger of GRID_PITCH and 4 * tol.
    """

    def __init__(self, tol: float = GROUP_TOL, pitch: float | None = None) -> None:
        if not np.isfinite(tol) or tol < 0:
            raise ValueError(f"Tolerance must be finite and nonnegative, got {tol}")
        if pitch is None:
            pitch = max(GRID_PITCH, 4 * tol)
        if pitch <= 2 * tol:
            raise ValueError(f"Grid pitch {pitch} must exceed twice the tolerance {tol}")
        self.tol = tol
        self.pitch = pitch
        self._buckets: dict[tuple, list[int]] = {}
        self._vectors: list[np.ndarray] = []

    def __len__(self) -> int:
        return len(self._vectors)

    def _cell(self, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        scaled = v / self.pitch
        # Cells are centred on grid points so exact zeros sit mid-cell
        cell = np.floor(scaled + 0.5)
        return cell.astype(np.int64), scaled - cell

    def _probe_cells(self, v: np.ndarray) -> list[tuple] | None:
        cell, frac = self._cell(v)
        band = self.tol / self.pitch
        # A coordinate is near at most one boundary since band < 1/2
        ambiguous = [(i, -1) for i in np.flatnonzero(frac <= band - 0.5)]
        ambiguous += [(i, 1) for i in np.flatnonzero(frac >= 0.5 - band)]

        if len(ambiguous) > MAX_PROBE_COORDS:
            return None

        keys = [tuple(cell)]
        for r in range(1, len(ambiguous) + 1):
            for combo in itertools.combinations(ambiguous, r):
                shifted = cell.copy()
                for i, step in combo:
                    shifted[i] += step
                keys.append(tuple(shifted))
        return keys

    def find(self, v) -> int | None:
        """Return the insertion index of a stored vector within tol of v, or None."""
        v = np.asarray(v, dtype=float).ravel()
        probes = self._probe_cells(v)

        if probes is None:
            logger.debug("Falling back to linear scan over %d stored vectors", len(self._vectors))
            candidates = range(len(self._vectors))
        else:
            candidates = [idx for key in probes for idx in self._buckets.get(key, ())]

        for idx in sorted(set(candidates)):
            if np.max(np.abs(self._vectors[idx] - v)) <= self.tol:
                return idx
        return None

    def add(self, v) -> tuple[int, bool]:
        """Insert v unless an equal vector is stored.

        Returns:
            tuple: (index, inserted) where index refers to the stored
                representative and inserted is False for duplicates.
        """
        v = np.asarray(v, dtype=float).ravel()
        existing = self.find(v)
        if existing is not None:
            return existing, False

        idx = len(self._vectors)
        self._vectors.append(v.copy())
        cell, _ = self._cell(v)
        self._buckets.setdefault(tuple(cell), []).append(idx)
        return idx, True
