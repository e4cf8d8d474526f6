"""Quotient metric on ℝ^d / G and orbit bookkeeping for finite datasets."""

import logging

import numpy as np
from scipy.spatial.distance import cdist

from .dataset import Dataset
from config.settings import ORBIT_TOL, SAME_ORBIT_TOL
from groups.base import GroupAction
from utils.errors import DomainError
from utils.input_validation import check_vector
from utils.tolerance_index import ToleranceIndex

logger = logging.getLogger(__name__)


def _point_index(tol: float) -> ToleranceIndex:
    return ToleranceIndex(tol=tol)


def _check_dataset(action: GroupAction, dataset: Dataset) -> None:
    if dataset.dim != action.dim:
        raise DomainError(
            "dimension-mismatch",
            f"Dataset dimension {dataset.dim} does not match action dimension {action.dim}."
        )


def quotient_distance(action: GroupAction, x, y) -> tuple[float, int]:
    """d([x],[y]) = min_g ‖x − U_g y‖ by brute force over every element.

    Returns:
        tuple: (distance, g) with g the lowest minimizing element index.

    Raises:
        DomainError: 'dimension-mismatch'.
    """
    x = check_vector(x, action.dim, name="x")
    y = check_vector(y, action.dim, name="y")
    distances = cdist(x[None, :], action.orbit_matrix(y))[0]
    g = int(np.argmin(distances))
    return float(distances[g]), g


def pairwise_quotient_distances(action: GroupAction, points) -> tuple[np.ndarray, np.ndarray]:
    """All pairwise orbit distances between the rows of points.

    Returns:
        tuple: (distances, argmins), both (n, n); argmins[a, b] is the lowest
            g minimizing ‖points[a] − U_g points[b]‖.
    """
    points = np.asarray(points, dtype=float)
    n = points.shape[0]
    # orbits[b, g] = U_g points[b]
    orbits = np.einsum('gij,bj->bgi', action.elements, points)
    distances = cdist(points, orbits.reshape(n * action.order, action.dim))
    distances = distances.reshape(n, n, action.order)
    return distances.min(axis=2), distances.argmin(axis=2)


def same_orbit(action: GroupAction, x, y, tol: float = SAME_ORBIT_TOL) -> bool:
    """True iff d([x],[y]) <= tol * (1 + ‖x‖)."""
    distance, _ = quotient_distance(action, x, y)
    return distance <= tol * (1.0 + float(np.linalg.norm(x)))


def orbit_with_elements(action: GroupAction, x, dedup_tol: float = ORBIT_TOL) -> tuple[np.ndarray, list[int]]:
    """The deduplicated orbit of x and, per kept point, the first element producing it."""
    x = check_vector(x, action.dim)
    index = _point_index(dedup_tol)
    points, kept = [], []
    for g in range(action.order):
        image = action.apply(g, x)
        if index.add(image)[1]:
            points.append(image)
            kept.append(g)
    points = np.array(points)
    if action.is_permutation_action:
        assert action.order % len(kept) == 0, "orbit size must divide the group order"
    return points, kept


def orbit(action: GroupAction, x, dedup_tol: float = ORBIT_TOL) -> np.ndarray:
    """[x] = {U_g x}, one row per distinct point, first representative kept.

    Raises:
        DomainError: 'dimension-mismatch'.
    """
    points, _ = orbit_with_elements(action, x, dedup_tol)
    return points


def orbit_closure(action: GroupAction, dataset: Dataset, dedup_tol: float = ORBIT_TOL) -> Dataset:
    """Smallest G-invariant superset of the dataset.

    Input points keep their ids (repeats within dedup_tol collapse onto the
    first). New points are named "{parent_id}#g{index}" after the first
    point and element that produced them, so closing twice is a no-op.

    Raises:
        DomainError: 'dimension-mismatch'.
    """
    _check_dataset(action, dataset)
    index = _point_index(dedup_tol)
    points, ids = [], []
    for point_id, x in zip(dataset.ids, dataset.points):
        if index.add(x)[1]:
            points.append(x)
            ids.append(point_id)

    n_inputs = len(points)
    for parent in range(n_inputs):
        x = points[parent]
        for g in action.non_identity():
            image = action.apply(g, x)
            if index.add(image)[1]:
                points.append(image)
                ids.append(f"{ids[parent]}#g{g}")

    logger.debug("Orbit closure grew %d points to %d", len(dataset), len(points))
    return Dataset(
        dim=dataset.dim,
        points=np.array(points).reshape(len(points), dataset.dim),
        ids=tuple(ids),
        invariant_flag=True
    )


def is_invariant(action: GroupAction, dataset: Dataset, dedup_tol: float = ORBIT_TOL) -> bool:
    """Whether every U_g x of every point is itself a dataset point within dedup_tol."""
    _check_dataset(action, dataset)
    index = _point_index(dedup_tol)
    for x in dataset.points:
        index.add(x)
    return all(
        index.find(image) is not None
        for x in dataset.points
        for image in action.orbit_matrix(x)
    )


def require_invariant(action: GroupAction, dataset: Dataset, dedup_tol: float = ORBIT_TOL) -> None:
    """Raise unless the dataset is flagged invariant or checks out as invariant.

    Raises:
        DomainError: 'not-invariant-dataset'.
    """
    _check_dataset(action, dataset)
    if dataset.invariant_flag or is_invariant(action, dataset, dedup_tol):
        return
    raise DomainError(
        "not-invariant-dataset",
        "Dataset is not closed under the group action; apply orbit_closure first."
    )


def orbit_representatives(action: GroupAction, dataset: Dataset, dedup_tol: float = ORBIT_TOL) -> list[int]:
    """Row indices of one point per orbit, in first-appearance order."""
    _check_dataset(action, dataset)
    index = _point_index(dedup_tol)
    representatives = []
    for k, x in enumerate(dataset.points):
        if index.find(x) is not None:
            continue
        representatives.append(k)
        for image in action.orbit_matrix(x):
            index.add(image)
    return representatives
