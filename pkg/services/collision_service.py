"""Adversarial search for near-collisions of the coorbit map."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from config.settings import (
    COLLISION_BUDGET,
    COLLISION_FLOOR,
    COLLISION_MIN_STEP,
    COLLISION_STEPS,
    RANDOM_SEED,
)
from filters.base import SelectionSet, WindowBank
from filters.coorbit import CoorbitFilter
from groups.base import GroupAction
from utils.errors import DomainError
from utils.seeding import make_rng, spawn_sequences

logger = logging.getLogger(__name__)

# Gap-direction projections tried before falling back to joint rescaling
MAX_PROJECTIONS = 3


@dataclass
class CollisionReport:
    """Best (lowest-ratio) pair found by collision_search.

    Attributes:
        best_pair: (x, y), each a d-vector.
        orbit_distance: d([x],[y]), never below the floor.
        embedding_gap: ‖Φ(x) − Φ(y)‖.
        ratio: embedding_gap / orbit_distance.
        trials: Restarts run.
        seed: Master seed.
        floor: Minimum orbit distance enforced.
        best_restart: Restart index that produced the pair.
    """
    best_pair: tuple
    orbit_distance: float
    embedding_gap: float
    ratio: float
    trials: int
    seed: int
    floor: float
    best_restart: int


class CollisionObjective:
    """ratio(x, y) = ‖Φ(x) − Φ(y)‖ / d([x],[y]) for batches of candidate pairs."""

    def __init__(self, action: GroupAction, feature_map: CoorbitFilter) -> None:
        self.action = action
        self.feature_map = feature_map

    def distances(self, xs: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Orbit distances and lowest minimizing elements, one per row pair."""
        # orbits[c, g] = U_g ys[c]
        orbits = np.einsum('gij,cj->cgi', self.action.elements, ys)
        lengths = np.linalg.norm(xs[:, None, :] - orbits, axis=2)
        return lengths.min(axis=1), lengths.argmin(axis=1)

    def evaluate(self, xs: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(ratios, gaps, distances); ratio is inf where the orbits coincide."""
        gaps = np.linalg.norm(
            self.feature_map.transform_many(xs) - self.feature_map.transform_many(ys), axis=1
        )
        distances, _ = self.distances(xs, ys)
        with np.errstate(divide='ignore', invalid='ignore'):
            ratios = np.where(distances > 0, gaps / distances, np.inf)
        return ratios, gaps, distances

    def ratio(self, x, y) -> float:
        ratios, _, _ = self.evaluate(np.atleast_2d(x), np.atleast_2d(y))
        return float(ratios[0])

    def enforce_floor(self, x: np.ndarray, y: np.ndarray, floor: float) -> tuple[np.ndarray, np.ndarray] | None:
        """Move (x, y) so that d([x],[y]) >= floor, or None if the orbits coincide."""
        xs, ys, valid = self.enforce_floor_many(np.atleast_2d(x), np.atleast_2d(y), floor)
        return (xs[0], ys[0]) if valid[0] else None

    def enforce_floor_many(self, xs: np.ndarray, ys: np.ndarray,
                           floor: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Row-wise floor enforcement for a batch of candidate pairs.

        Each y is first pushed away along the gap direction x − U_g y; rows
        where another element then comes closer than the floor are scaled
        jointly, which leaves their ratio unchanged. Rows already at or above
        the floor are returned untouched.

        Returns:
            (xs, ys, valid), valid False where the two orbits coincide.
        """
        xs = np.array(xs, dtype=float)
        ys = np.array(ys, dtype=float)
        valid = np.ones(len(xs), dtype=bool)
        pending = valid.copy()

        for _ in range(MAX_PROJECTIONS):
            distances, gs = self.distances(xs, ys)
            valid &= ~(pending & (distances == 0))
            pending &= valid & (distances < floor)
            if not pending.any():
                return xs, ys, valid
            rows = np.flatnonzero(pending)
            u = self.action.elements[gs[rows]]
            gap = xs[rows] - np.einsum('cij,cj->ci', u, ys[rows])
            pushed = xs[rows] - (floor / distances[rows] * (1.0 + 1e-12))[:, None] * gap
            # U_g^T pushed, row by row
            ys[rows] = np.einsum('cji,cj->ci', u, pushed)

        distances, _ = self.distances(xs, ys)
        valid &= ~(pending & (distances == 0))
        pending &= valid & (distances < floor)
        safe = np.where(pending, distances, 1.0)
        scale = np.where(pending, floor / safe * (1.0 + 1e-12), 1.0)[:, None]
        return scale * xs, scale * ys, valid


def _descend(objective: CollisionObjective, x: np.ndarray, y: np.ndarray,
             floor: float, steps: int) -> tuple[np.ndarray, np.ndarray, float]:
    """Coordinate descent on (x, y) with step halving."""
    dim = x.shape[0]
    z = np.concatenate([x, y])
    best = objective.ratio(x, y)
    step = 0.5 * max(float(np.linalg.norm(z)) / np.sqrt(2 * dim), floor)
    moves = np.vstack([np.eye(2 * dim), -np.eye(2 * dim)])

    for _ in range(steps):
        if step < COLLISION_MIN_STEP:
            break
        trials = z + step * moves
        xs, ys, valid = objective.enforce_floor_many(trials[:, :dim], trials[:, dim:], floor)
        if not valid.any():
            step *= 0.5
            continue
        candidates = np.hstack([xs, ys])[valid]
        ratios, _, _ = objective.evaluate(candidates[:, :dim], candidates[:, dim:])
        k = int(np.argmin(ratios))
        if ratios[k] < best:
            best, z = float(ratios[k]), candidates[k]
        else:
            step *= 0.5
    return z[:dim], z[dim:], best


def _restart(objective: CollisionObjective, sequence: np.random.SeedSequence,
             floor: float, steps: int) -> tuple[np.ndarray, np.ndarray, float]:
    rng = make_rng(sequence)
    dim = objective.action.dim
    while True:
        x, y = rng.standard_normal(dim), rng.standard_normal(dim)
        projected = objective.enforce_floor(x, y, floor)
        if projected is not None:
            break
    return _descend(objective, projected[0], projected[1], floor, steps)


def collision_search(
    action: GroupAction,
    bank: WindowBank,
    sel: SelectionSet,
    budget: int = COLLISION_BUDGET,
    floor: float = COLLISION_FLOOR,
    seed: int = RANDOM_SEED,
    steps: int = COLLISION_STEPS,
    threads: int = 1
) -> CollisionReport:
    """Search for pairs with d([x],[y]) >= floor and a small ‖Φ(x) − Φ(y)‖ / d([x],[y]).

    Each restart draws a Gaussian pair from its own child of
    SeedSequence(seed) and refines it by coordinate descent, so the report
    is identical for any thread count.

    Args:
        action: Group action.
        bank: Window bank.
        sel: Selection set.
        budget: Number of restarts (>= 1).
        floor: Minimum orbit distance (> 0).
        seed: Master seed.
        steps: Descent steps per restart.
        threads: Worker threads; 0 picks the executor default.

    Returns:
        CollisionReport for the lowest ratio found, ties to the earliest restart.
    """
    if budget < 1:
        raise DomainError("config-inconsistent", f"budget must be >= 1, got {budget}.")
    if not floor > 0:
        raise DomainError("config-inconsistent", f"floor must be > 0, got {floor}.")

    objective = CollisionObjective(action, CoorbitFilter(action, bank, sel))
    sequences = spawn_sequences(seed, budget)

    def run(sequence):
        return _restart(objective, sequence, floor, steps)

    if threads == 1:
        results = [run(s) for s in sequences]
    else:
        with ThreadPoolExecutor(max_workers=threads or None) as executor:
            results = list(executor.map(run, sequences))

    best_restart = int(np.argmin([r[2] for r in results]))
    x, y, _ = results[best_restart]
    ratios, gaps, distances = objective.evaluate(x[None, :], y[None, :])
    report = CollisionReport(
        best_pair=(x, y),
        orbit_distance=float(distances[0]),
        embedding_gap=float(gaps[0]),
        ratio=float(ratios[0]),
        trials=budget,
        seed=int(seed),
        floor=float(floor),
        best_restart=best_restart
    )
    logger.info("Collision search: best ratio %.6g after %d restarts", report.ratio, budget)
    return report
