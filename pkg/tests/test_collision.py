import numpy as np
import pytest

from config.settings import COLLISION_BUDGET
from conftest import builtin_actions
from filters import CoorbitFilter, SelectionSet
from groups import build_cyclic_shift, build_dihedral, build_sign_flip
from orbits import quotient_distance
from services.collision_service import CollisionObjective, collision_search
from services.embedding_service import build_config, sample_windows
from utils.errors import DomainError

SEPARATED_ACTIONS = [(name, action) for name, action in builtin_actions(range(3, 6)) if not name.startswith("sign_flip")]


def search(action, p, budget, seed=0, **kwargs):
    bank = sample_windows(action.dim, p, seed=seed + 1000)
    return collision_search(action, bank, SelectionSet.singletons(p), budget=budget, seed=seed, **kwargs)


def rich_search(action, budget, seed, **kwargs):
    config = build_config({"type": "cyclic", "dim": action.dim}, action, n=2, p=6, seed=seed)
    return collision_search(action, config.bank, config.selection, budget=budget, seed=seed, **kwargs)


class TestCollisionSearch:

    def test_same_seed_same_report(self):
        action = build_sign_flip(3)
        first = search(action, 6, budget=5, seed=4, steps=50)
        second = search(action, 6, budget=5, seed=4, steps=50)
        assert first.ratio == second.ratio
        assert first.best_restart == second.best_restart
        np.testing.assert_array_equal(first.best_pair[0], second.best_pair[0])
        np.testing.assert_array_equal(first.best_pair[1], second.best_pair[1])

    def test_threads_match_serial(self):
        action = build_cyclic_shift(3)
        serial = search(action, 6, budget=8, seed=2, steps=30)
        threaded = search(action, 6, budget=8, seed=2, steps=30, threads=4)
        assert serial.ratio == threaded.ratio
        assert serial.best_restart == threaded.best_restart

    def test_floor_is_respected(self):
        report = search(build_dihedral(3), 6, budget=5, seed=3, steps=50, floor=0.5)
        assert report.orbit_distance >= 0.5
        assert report.ratio >= 0
        x, y = report.best_pair
        assert quotient_distance(build_dihedral(3), x, y)[0] == pytest.approx(report.orbit_distance)

    def test_one_window_collides(self):
        report = search(build_sign_flip(2), 1, budget=5, seed=9)
        assert report.ratio < 1e-3
        assert report.orbit_distance >= report.floor

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_two_d_windows_stay_separated(self, seed):
        report = search(build_sign_flip(3), 6, budget=20, seed=seed, steps=100)
        assert report.ratio > 1e-3

    def test_invalid_arguments(self):
        action = build_sign_flip(2)
        with pytest.raises(DomainError):
            search(action, 4, budget=0)
        with pytest.raises(DomainError):
            search(action, 4, budget=1, floor=0.0)


class TestObjective:

    def test_ratio_invariant_under_action(self, rng):
        action = build_dihedral(4)
        bank = sample_windows(4, 8, seed=5)
        objective = CollisionObjective(action, CoorbitFilter(action, bank, SelectionSet.singletons(8)))
        for _ in range(20):
            x, y = rng.standard_normal((2, 4))
            reference = objective.ratio(x, y)
            for g in range(action.order):
                assert objective.ratio(action.apply(g, x), y) == pytest.approx(reference, rel=1e-12)

    def test_same_orbit_is_infinite(self, sign_flip2):
        bank = sample_windows(2, 4, seed=1)
        objective = CollisionObjective(sign_flip2, CoorbitFilter(sign_flip2, bank, SelectionSet.singletons(4)))
        assert objective.ratio([1.0, 2.0], [-1.0, -2.0]) == np.inf

    def test_enforce_floor(self, sign_flip2):
        bank = sample_windows(2, 4, seed=1)
        objective = CollisionObjective(sign_flip2, CoorbitFilter(sign_flip2, bank, SelectionSet.singletons(4)))
        x, y = objective.enforce_floor(np.array([1.0, 0.0]), np.array([1.0, 0.001]), 0.1)
        assert quotient_distance(sign_flip2, x, y)[0] >= 0.1
        assert objective.enforce_floor(np.array([1.0, 0.0]), np.array([-1.0, 0.0]), 0.1) is None

    def test_batched_floor_matches_pairwise(self, rng):
        action = build_dihedral(4)
        objective = CollisionObjective(action, CoorbitFilter(action, sample_windows(4, 8, seed=2), SelectionSet.singletons(8)))
        xs = rng.standard_normal((40, 4))
        ys = xs + 0.05 * rng.standard_normal((40, 4))
        ys[:5] = np.einsum("nij,nj->ni", action.elements[[1, 2, 3, 4, 5]], xs[:5])
        new_xs, new_ys, valid = objective.enforce_floor_many(xs, ys, 0.1)
        assert not valid[:5].any()
        assert valid[5:].all()
        distances, _ = objective.distances(new_xs[valid], new_ys[valid])
        assert np.all(distances >= 0.1)
        for x, y, nx, ny in zip(xs[5:], ys[5:], new_xs[5:], new_ys[5:]):
            single = objective.enforce_floor(x, y, 0.1)
            np.testing.assert_allclose(single[0], nx, rtol=1e-12, atol=1e-12)
            np.testing.assert_allclose(single[1], ny, rtol=1e-12, atol=1e-12)


class TestSeparation:

    @pytest.mark.parametrize("seed", [0, 1, 2])
    @pytest.mark.parametrize("name, action", SEPARATED_ACTIONS)
    def test_max_filter_with_two_d_windows(self, name, action, seed):
        report = search(action, 2 * action.dim, budget=8, seed=seed)
        assert report.orbit_distance >= 1e-2
        assert report.ratio > 1e-3

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_rich_plan_of_cyclic4(self, cyclic4, seed):
        report = rich_search(cyclic4, budget=8, seed=seed)
        assert report.ratio > 1e-3

    @pytest.mark.slow
    @pytest.mark.parametrize("name, action", SEPARATED_ACTIONS)
    def test_max_filter_full_budget(self, name, action):
        for seed in range(10):
            report = search(action, 2 * action.dim, budget=COLLISION_BUDGET, seed=seed, threads=0)
            assert report.ratio > 1e-3, f"seed {seed}"

    @pytest.mark.slow
    def test_rich_plan_full_budget(self, cyclic4):
        for seed in range(10):
            assert rich_search(cyclic4, budget=COLLISION_BUDGET, seed=seed, threads=0).ratio > 1e-3, f"seed {seed}"
