"""Bi-Lipschitz constants and separation checks on finite invariant datasets."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from config.settings import LIPSCHITZ_SLACK, ORBIT_TOL, SEPARATION_TOL
from filters.base import SelectionSet, WindowBank
from filters.coorbit import CoorbitFilter
from filters.reduction import LinearReduction
from groups.base import GroupAction
from orbits.dataset import Dataset
from orbits.metric import (
    orbit_representatives,
    pairwise_quotient_distances,
    require_invariant,
)
from utils.errors import DomainError
from utils.input_validation import check_vector

logger = logging.getLogger(__name__)


@dataclass
class BoundsReport:
    """Optimal bi-Lipschitz constants of a map on a finite invariant set.

    Attributes:
        a_w: min over non-equivalent pairs of ‖Φ(x) − Φ(y)‖ / d([x],[y]).
        b_w: The matching max.
        trivial_upper: The a-priori upper constant (‖w‖ for a single window).
        witness_lower: Ids of a pair attaining a_w.
        witness_upper: Ids of a pair attaining b_w.
        pair_count: Non-equivalent representative pairs scanned.
        orbit_count: Distinct orbits in the dataset.
    """
    a_w: float
    b_w: float
    trivial_upper: float
    witness_lower: tuple
    witness_upper: tuple
    pair_count: int
    orbit_count: int


@dataclass
class OrbitScan:
    """Per-orbit representatives with their features and pairwise orbit distances."""
    ids: tuple
    points: np.ndarray
    features: np.ndarray
    distances: np.ndarray

    def pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """Index arrays (a, b), a < b, of representative pairs in distinct orbits."""
        a, b = np.triu_indices(len(self.ids), k=1)
        keep = self.distances[a, b] > 0
        return a[keep], b[keep]

    def gaps(self) -> np.ndarray:
        return cdist(self.features, self.features)


def _scan_orbits(action: GroupAction, feature_map: CoorbitFilter, dataset: Dataset,
                 dedup_tol: float = ORBIT_TOL, reduction: LinearReduction | None = None) -> OrbitScan:
    require_invariant(action, dataset, dedup_tol)
    reps = orbit_representatives(action, dataset, dedup_tol)
    points = dataset.points[reps]
    features = feature_map.transform_many(points)
    if reduction is not None:
        features = reduction.apply_many(features)
    distances, _ = pairwise_quotient_distances(action, points)
    return OrbitScan(
        ids=tuple(dataset.ids[k] for k in reps),
        points=points,
        features=features,
        distances=distances
    )


def _bounds_from_scan(scan: OrbitScan, trivial_upper: float) -> BoundsReport:
    a, b = scan.pairs()
    if len(scan.ids) < 2 or a.size == 0:
        raise DomainError(
            "fewer-than-two-orbits",
            f"Bounds need at least two distinct orbits, dataset has {len(scan.ids)}."
        )
    ratios = scan.gaps()[a, b] / scan.distances[a, b]
    lo, hi = int(np.argmin(ratios)), int(np.argmax(ratios))
    report = BoundsReport(
        a_w=float(ratios[lo]),
        b_w=float(ratios[hi]),
        trivial_upper=float(trivial_upper),
        witness_lower=(scan.ids[a[lo]], scan.ids[b[lo]]),
        witness_upper=(scan.ids[a[hi]], scan.ids[b[hi]]),
        pair_count=int(a.size),
        orbit_count=len(scan.ids)
    )
    assert report.b_w <= report.trivial_upper + LIPSCHITZ_SLACK * (1.0 + report.trivial_upper)
    logger.info(
        "Bounds over %d pairs: a_w=%.6g b_w=%.6g (trivial %.6g)",
        report.pair_count, report.a_w, report.b_w, report.trivial_upper
    )
    return report


def lipschitz_bounds(action: GroupAction, w, j: int, dataset: Dataset,
                     dedup_tol: float = ORBIT_TOL) -> BoundsReport:
    """Optimal constants a_w, b_w of x ↦ Φ_{w,j}(x) on a finite invariant set.

    One representative per orbit is scanned since both |Φ(x) − Φ(y)| and
    d([x],[y]) are constant on orbit pairs.

    Raises:
        DomainError: 'not-invariant-dataset', 'fewer-than-two-orbits',
            'zero-window', 'rank-out-of-range'.
    """
    bank = WindowBank(dim=action.dim, windows=check_vector(w, action.dim, name="w")[None, :])
    feature_map = CoorbitFilter(action, bank, SelectionSet(per_window=((int(j),),)))
    scan = _scan_orbits(action, feature_map, dataset, dedup_tol)
    return _bounds_from_scan(scan, trivial_upper=float(bank.norms()[0]))


def lipschitz_bounds_bank(action: GroupAction, bank: WindowBank, sel: SelectionSet, dataset: Dataset,
                          dedup_tol: float = ORBIT_TOL) -> BoundsReport:
    """Optimal constants of the full map Φ_{w,S}, with trivial bound sqrt(Σ|S_i|·‖w_i‖²)."""
    feature_map = CoorbitFilter(action, bank, sel)
    scan = _scan_orbits(action, feature_map, dataset, dedup_tol)
    trivial_upper = float(np.sqrt(np.sum(np.asarray(sel.sizes) * bank.norms() ** 2)))
    return _bounds_from_scan(scan, trivial_upper)


def separation_check(action: GroupAction, bank: WindowBank, sel: SelectionSet, dataset: Dataset,
                     tol: float = SEPARATION_TOL, reduction: LinearReduction | None = None,
                     dedup_tol: float = ORBIT_TOL) -> list[dict]:
    """Non-equivalent orbit pairs that Φ_{w,S} (optionally followed by ℓ) fails to separate.

    A pair counts as unseparated when ‖Φ(x) − Φ(y)‖ <= tol * (1 + max(‖Φ(x)‖, ‖Φ(y)‖)).

    Returns:
        List of {'pair', 'gap', 'orbit_distance'} entries, empty when every
        pair is separated.

    Raises:
        DomainError: 'not-invariant-dataset'.
    """
    scan = _scan_orbits(action, CoorbitFilter(action, bank, sel), dataset, dedup_tol, reduction)
    a, b = scan.pairs()
    gaps = scan.gaps()[a, b]
    norms = np.linalg.norm(scan.features, axis=1)
    threshold = tol * (1.0 + np.maximum(norms[a], norms[b]))

    failures = [
        {
            'pair': (scan.ids[a[k]], scan.ids[b[k]]),
            'gap': float(gaps[k]),
            'orbit_distance': float(scan.distances[a[k], b[k]])
        }
        for k in np.flatnonzero(gaps <= threshold)
    ]
    if failures:
        logger.info("%d of %d orbit pairs are not separated", len(failures), a.size)
    return failures


def window_margin(action: GroupAction, w, dataset: Dataset,
                  dedup_tol: float = ORBIT_TOL) -> tuple[float, tuple | None]:
    """Distance-normalized clearance of w from every collision hyperplane of the dataset.

    Returns min over non-equivalent representative pairs (x, y) and all
    h1, h2 of |⟨w, U_h1 x − U_h2 y⟩| / ‖U_h1 x − U_h2 y‖, with the pair that
    attains it. A positive margin means every Φ_{w,j} separates the orbits.

    Raises:
        DomainError: 'not-invariant-dataset', 'fewer-than-two-orbits', 'zero-window'.
    """
    w = check_vector(w, action.dim, name="w")
    if not np.any(w):
        raise DomainError("zero-window", "Window vector w must be nonzero.")
    require_invariant(action, dataset, dedup_tol)
    reps = orbit_representatives(action, dataset, dedup_tol)
    if len(reps) < 2:
        raise DomainError(
            "fewer-than-two-orbits",
            f"A margin needs at least two distinct orbits, dataset has {len(reps)}."
        )

    orbits = [action.orbit_matrix(dataset.points[k]) for k in reps]
    projections = [orbit @ w for orbit in orbits]
    margin, witness = np.inf, None
    for a in range(len(reps)):
        for b in range(a + 1, len(reps)):
            lengths = cdist(orbits[a], orbits[b])
            if np.min(lengths) == 0:
                continue
            heights = np.abs(projections[a][:, None] - projections[b][None, :])
            value = float(np.min(heights / lengths))
            if value < margin:
                margin, witness = value, (dataset.ids[reps[a]], dataset.ids[reps[b]])

    if witness is None:
        raise DomainError("fewer-than-two-orbits", "Every representative pair shares an orbit.")
    return margin, witness
