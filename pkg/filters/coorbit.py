"""Sorted coorbit filters Φ_{w,S}."""

import logging

import numpy as np

from .base import CoorbitVector, InvariantMap, SelectionSet, WindowBank
from groups.base import GroupAction
from utils.errors import DomainError
from utils.input_validation import check_points, check_vector

logger = logging.getLogger(__name__)


def sort_descending(v) -> np.ndarray:
    """Sort a vector in non-increasing order, stable on ties."""
    v = np.asarray(v, dtype=float)
    return v[np.argsort(-v, kind="stable")]


def _check_window(action: GroupAction, w) -> np.ndarray:
    w = check_vector(w, action.dim, name="w")
    if not np.any(w):
        raise DomainError("zero-window", "Window vector w must be nonzero.")
    return w


def full_coorbit(action: GroupAction, w, x, provenance: tuple | None = None) -> CoorbitVector:
    """The sorted coorbit ↓(⟨U_g w, x⟩)_{g∈G} of length N.

    Computed as one (N×d)·d product against the window orbit, then a stable
    descending sort; ties keep group-element index order.

    Raises:
        DomainError: 'dimension-mismatch', 'zero-window'.
    """
    w = _check_window(action, w)
    x = check_vector(x, action.dim)
    values = action.orbit_matrix(w) @ x
    order = np.argsort(-values, kind="stable")
    return CoorbitVector(values=values[order], order=order, provenance=provenance)


def coorbit_entry(action: GroupAction, w, j: int, x) -> float:
    """Φ_{w,j}(x), the j-th (1-based) entry of the sorted coorbit.

    Raises:
        DomainError: 'rank-out-of-range' unless 1 <= j <= N.
    """
    if int(j) != j or not 1 <= j <= action.order:
        raise DomainError("rank-out-of-range", f"Rank j must be in [1, {action.order}], got {j}.")
    return full_coorbit(action, w, x)[int(j) - 1]


def coorbit_argsort(action: GroupAction, w, x) -> np.ndarray:
    """Element indices in coorbit order: entry j of the sorted coorbit is ⟨U_g w, x⟩ for g = result[j]."""
    return full_coorbit(action, w, x).order


class CoorbitFilter(InvariantMap):
    """The bank map Φ_{w,S}: concatenated selected coorbit entries.

    The window orbits (U_g w_i)ᵀ are precomputed once as a (p, N, d) array,
    so each evaluation is one batched mat-vec plus one sort per window.

    Attributes:
        action: Group acting on ℝ^d.
        bank: Window bank, p windows.
        selection: Rank lists S_i, one per window.
    """

    def __init__(self, action: GroupAction, bank: WindowBank, selection: SelectionSet) -> None:
        if bank.dim != action.dim:
            raise DomainError(
                "dimension-mismatch",
                f"Bank dimension {bank.dim} does not match action dimension {action.dim}."
            )
        selection.check_compatible(bank.p, action.order)
        self.action = action
        self.bank = bank
        self.selection = selection

        orbits = np.einsum('gij,pj->pgi', action.elements, bank.windows)
        orbits.setflags(write=False)
        self._orbits = orbits
        self._rows = np.repeat(np.arange(bank.p), selection.sizes)
        self._cols = np.concatenate([np.asarray(ranks) - 1 for ranks in selection.per_window])
        # Adjacent output positions that belong to the same window block
        self._same_block = self._rows[1:] == self._rows[:-1]
        logger.debug(
            "Precomputed window orbits: p=%d, N=%d, d=%d, m=%d",
            bank.p, action.order, action.dim, selection.m
        )

    @property
    def dim(self) -> int:
        return self.action.dim

    @property
    def output_dim(self) -> int:
        return self.selection.m

    def coorbits(self, x) -> np.ndarray:
        """(p, N) array whose i-th row is ↓(⟨U_g w_i, x⟩)_g."""
        x = check_vector(x, self.dim)
        values = self._orbits @ x
        return -np.sort(-values, axis=1)

    def transform(self, x) -> np.ndarray:
        out = self.coorbits(x)[self._rows, self._cols]
        # Blocks are already sorted because ranks are stored ascending
        assert np.all(np.diff(out)[self._same_block] <= 0)
        return out

    def transform_many(self, points) -> np.ndarray:
        points = check_points(points, self.dim)
        if points.shape[0] == 0:
            return np.zeros((0, self.output_dim))
        values = np.einsum('pgi,ni->npg', self._orbits, points)
        ordered = -np.sort(-values, axis=2)
        return ordered[:, self._rows, self._cols]


class MaxFilter(CoorbitFilter):
    """Max filter ⟨⟨w_i, x⟩⟩ = max_g ⟨U_g w_i, x⟩: the singleton selection S_i = {1}."""

    def __init__(self, action: GroupAction, bank: WindowBank) -> None:
        super().__init__(action, bank, SelectionSet.singletons(bank.p))

    def transform(self, x) -> np.ndarray:
        x = check_vector(x, self.dim)
        return np.max(self._orbits @ x, axis=1)

    def transform_many(self, points) -> np.ndarray:
        points = check_points(points, self.dim)
        if points.shape[0] == 0:
            return np.zeros((0, self.output_dim))
        return np.max(np.einsum('pgi,ni->npg', self._orbits, points), axis=2)


def coorbit_map(action: GroupAction, bank: WindowBank, sel: SelectionSet, x) -> np.ndarray:
    """Φ_{w,S}(x) as an m-vector.

    Raises:
        DomainError: 'selection-shape-mismatch', 'rank-out-of-range',
            'dimension-mismatch'.
    """
    return CoorbitFilter(action, bank, sel).transform(x)


def max_filter(action: GroupAction, bank: WindowBank, x) -> np.ndarray:
    """The max filter map, a p-vector with entries max_g ⟨U_g w_i, x⟩."""
    return MaxFilter(action, bank).transform(x)
