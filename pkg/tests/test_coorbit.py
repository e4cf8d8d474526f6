import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import BUILTIN_ACTIONS, SMALL_ACTIONS
from filters import (
    CoorbitFilter,
    CoorbitVector,
    MaxFilter,
    SelectionSet,
    WindowBank,
    coorbit_argsort,
    coorbit_entry,
    coorbit_map,
    full_coorbit,
    max_filter,
    sort_descending,
)
from groups import build_cyclic_shift, build_dihedral, build_sign_flip
from utils.errors import DomainError

REL_TOL = 1e-12

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


def nonzero(v):
    return np.any(v)


def vectors_of(dim):
    return arrays(np.float64, (dim,), elements=finite)


def coorbit_grid(action, windows, points):
    """(n_points, n_windows, N) array of every coorbit entry."""
    sel = SelectionSet.from_lists([range(1, action.order + 1)] * len(windows))
    phi = CoorbitFilter(action, WindowBank.from_vectors(windows), sel)
    return phi.transform_many(points).reshape(len(points), len(windows), action.order)


def pair_scale(ws, xs):
    # [a, i] pairs point a with window i
    return 1.0 + np.linalg.norm(xs, axis=1)[:, None, None] * np.linalg.norm(ws, axis=1)[None, :, None]


class TestSortDescending:

    @pytest.mark.parametrize("values, expected", [
        ((1, 5, 2), (5, 2, 1)),
        ((0, 0, 0), (0, 0, 0)),
        ((-1, -3, -2), (-1, -2, -3)),
    ])
    def test_examples(self, values, expected):
        np.testing.assert_array_equal(sort_descending(values), expected)


class TestFullCoorbit:

    def test_sign_flip(self, sign_flip2):
        np.testing.assert_array_equal(full_coorbit(sign_flip2, [1.0, 0.0], [3.0, 4.0]).values, [3, -3])

    def test_zero_point(self, cyclic4):
        np.testing.assert_array_equal(full_coorbit(cyclic4, [1.0, 2.0, 0.0, 0.0], np.zeros(4)).values, np.zeros(4))

    def test_cyclic_unit_window_lists_coordinates(self):
        action = build_cyclic_shift(3)
        np.testing.assert_array_equal(full_coorbit(action, [1.0, 0.0, 0.0], [1.0, 2.0, 3.0]).values, [3, 2, 1])

    def test_zero_window_rejected(self, cyclic4):
        with pytest.raises(DomainError) as excinfo:
            full_coorbit(cyclic4, np.zeros(4), np.ones(4))
        assert excinfo.value.kind == "zero-window"

    def test_dimension_mismatch(self, cyclic4):
        with pytest.raises(DomainError) as excinfo:
            full_coorbit(cyclic4, np.ones(3), np.ones(4))
        assert excinfo.value.kind == "dimension-mismatch"

    def test_ties_keep_element_order(self, sign_flip2):
        assert list(coorbit_argsort(sign_flip2, [1.0, 0.0], [0.0, 1.0])) == [0, 1]

    def test_argsort_points_at_elements(self, rng):
        action = build_dihedral(5)
        w, x = rng.standard_normal(5), rng.standard_normal(5)
        values = full_coorbit(action, w, x).values
        for j, g in enumerate(coorbit_argsort(action, w, x)):
            assert values[j] == pytest.approx(np.dot(action.apply(g, w), x), abs=1e-12)

    def test_increasing_values_rejected(self):
        with pytest.raises(ValueError):
            CoorbitVector(values=np.array([1.0, 2.0]))


class TestCoorbitEntry:

    def test_second_rank(self, sign_flip2):
        assert coorbit_entry(sign_flip2, [1.0, 0.0], 2, [3.0, 4.0]) == -3.0

    def test_zero_point(self, cyclic4):
        assert coorbit_entry(cyclic4, np.ones(4), 1, np.zeros(4)) == 0.0

    def test_first_rank_is_max(self, rng):
        action = build_dihedral(4)
        w, x = rng.standard_normal(4), rng.standard_normal(4)
        assert coorbit_entry(action, w, 1, x) == np.max(action.orbit_matrix(w) @ x)

    @pytest.mark.parametrize("j", [0, 5, 1.5])
    def test_rank_out_of_range(self, cyclic4, j):
        with pytest.raises(DomainError) as excinfo:
            coorbit_entry(cyclic4, np.ones(4), j, np.ones(4))
        assert excinfo.value.kind == "rank-out-of-range"


class TestCoorbitMap:

    def test_both_ranks_of_sign_flip(self, sign_flip2):
        bank = WindowBank.from_vectors([[1.0, 0.0]])
        sel = SelectionSet.from_lists([[1, 2]])
        np.testing.assert_array_equal(coorbit_map(sign_flip2, bank, sel, [3.0, 4.0]), [3, -3])

    def test_singletons_equal_max_filter(self, rng):
        action = build_dihedral(5)
        bank = WindowBank.from_vectors(rng.standard_normal((10, 5)))
        for _ in range(20):
            x = rng.standard_normal(5)
            np.testing.assert_array_equal(
                coorbit_map(action, bank, SelectionSet.singletons(10), x),
                max_filter(action, bank, x)
            )

    def test_max_filter_of_sign_flip_is_absolute_value(self, rng):
        action = build_sign_flip(3)
        bank = WindowBank.from_vectors(rng.standard_normal((6, 3)))
        x = rng.standard_normal(3)
        np.testing.assert_allclose(max_filter(action, bank, x), np.abs(bank.windows @ x), rtol=1e-13, atol=1e-13)

    def test_selection_shape_mismatch(self, cyclic4):
        bank = WindowBank.from_vectors(np.eye(4)[:2])
        with pytest.raises(DomainError) as excinfo:
            coorbit_map(cyclic4, bank, SelectionSet.singletons(3), np.ones(4))
        assert excinfo.value.kind == "selection-shape-mismatch"

    def test_rank_beyond_group_order(self, sign_flip2):
        bank = WindowBank.from_vectors([[1.0, 0.0]])
        with pytest.raises(DomainError) as excinfo:
            coorbit_map(sign_flip2, bank, SelectionSet.from_lists([[3]]), [1.0, 1.0])
        assert excinfo.value.kind == "rank-out-of-range"

    def test_batched_path_matches_single_point(self, rng):
        action = build_cyclic_shift(6)
        bank = WindowBank.from_vectors(rng.standard_normal((4, 6)))
        phi = CoorbitFilter(action, bank, SelectionSet.from_lists([[1, 3], [2], [1, 2, 6], [4]]))
        points = rng.standard_normal((30, 6))
        batched = phi.transform_many(points)
        assert batched.shape == (30, 7)
        for row, x in zip(batched, points):
            np.testing.assert_allclose(row, phi.transform(x), rtol=1e-13, atol=1e-13)
        assert phi.transform_many(np.zeros((0, 6))).shape == (0, 7)

    def test_max_filter_batched(self, rng):
        action = build_sign_flip(3)
        mf = MaxFilter(action, WindowBank.from_vectors(rng.standard_normal((6, 3))))
        points = rng.standard_normal((10, 3))
        np.testing.assert_allclose(mf.transform_many(points), np.vstack([mf.transform(x) for x in points]))


class TestTypes:

    def test_zero_window_in_bank(self):
        with pytest.raises(DomainError) as excinfo:
            WindowBank.from_vectors([[1.0, 0.0], [0.0, 0.0]])
        assert excinfo.value.kind == "zero-window"

    def test_bank_is_read_only(self):
        bank = WindowBank.from_vectors([[1.0, 2.0]])
        with pytest.raises(ValueError):
            bank.windows[0, 0] = 5.0

    def test_empty_rank_list(self):
        with pytest.raises(DomainError) as excinfo:
            SelectionSet(per_window=((1,), ()))
        assert excinfo.value.kind == "empty-selection"

    def test_unsorted_ranks_rejected_but_from_lists_sorts(self):
        with pytest.raises(DomainError):
            SelectionSet(per_window=((2, 1),))
        sel = SelectionSet.from_lists([[3, 1, 2], [1]])
        assert sel.per_window == ((1, 2, 3), (1,))
        assert sel.m == 4
        assert sel.sizes == (3, 1)
        assert sel.max_rank == 3


class TestProperties:

    @pytest.mark.parametrize("name, action", BUILTIN_ACTIONS)
    def test_invariance(self, name, action, rng):
        d = action.dim
        sel = SelectionSet.from_lists([range(1, action.order + 1)] + [[1]] * (2 * d - 1))
        for _ in range(10):
            bank = WindowBank.from_vectors(rng.standard_normal((2 * d, d)))
            phi = CoorbitFilter(action, bank, sel)
            xs = rng.standard_normal((100, d))
            moved = np.einsum('nij,nj->ni', action.elements[rng.integers(action.order, size=100)], xs)
            scale = 1.0 + np.linalg.norm(xs, axis=1, keepdims=True) * np.max(bank.norms())
            assert np.all(np.abs(phi.transform_many(moved) - phi.transform_many(xs)) <= REL_TOL * scale)

    @pytest.mark.parametrize("name, action", BUILTIN_ACTIONS)
    def test_rank_symmetry(self, name, action, rng):
        ws, xs = rng.standard_normal((2, 32, action.dim))
        forward = coorbit_grid(action, ws, xs)
        backward = coorbit_grid(action, xs, ws).transpose(1, 0, 2)
        assert np.all(np.abs(forward - backward) <= REL_TOL * pair_scale(ws, xs))

    @pytest.mark.parametrize("lam", [0.5, 2.0, 10.0])
    @pytest.mark.parametrize("name, action", BUILTIN_ACTIONS)
    def test_positive_homogeneity(self, name, action, lam, rng):
        ws, xs = rng.standard_normal((2, 32, action.dim))
        base = coorbit_grid(action, ws, xs)
        bound = REL_TOL * lam * pair_scale(ws, xs)
        assert np.all(np.abs(coorbit_grid(action, lam * ws, xs) - lam * base) <= bound)
        assert np.all(np.abs(coorbit_grid(action, ws, lam * xs) - lam * base) <= bound)

    @pytest.mark.parametrize("name, action", SMALL_ACTIONS)
    @seed(7)
    @settings(max_examples=50, deadline=None)
    @given(data=st.data())
    def test_rank_symmetry_examples(self, name, action, data):
        w = data.draw(vectors_of(action.dim).filter(nonzero))
        x = data.draw(vectors_of(action.dim).filter(nonzero))
        j = data.draw(st.integers(min_value=1, max_value=action.order))
        scale = 1.0 + np.linalg.norm(w) * np.linalg.norm(x)
        assert abs(coorbit_entry(action, w, j, x) - coorbit_entry(action, x, j, w)) <= REL_TOL * scale

    @pytest.mark.parametrize("name, action", SMALL_ACTIONS)
    @seed(11)
    @settings(max_examples=50, deadline=None)
    @given(data=st.data())
    def test_positive_homogeneity_examples(self, name, action, data):
        w = data.draw(vectors_of(action.dim).filter(nonzero))
        x = data.draw(vectors_of(action.dim))
        lam = data.draw(st.sampled_from([0.5, 2.0, 10.0]))
        base = full_coorbit(action, w, x).values
        scale = REL_TOL * lam * (1.0 + np.linalg.norm(w) * np.linalg.norm(x))
        assert np.max(np.abs(full_coorbit(action, lam * w, x).values - lam * base)) <= scale
        assert np.max(np.abs(full_coorbit(action, w, lam * x).values - lam * base)) <= scale

    @pytest.mark.parametrize("name, action", SMALL_ACTIONS)
    def test_window_covariance(self, name, action, rng):
        w, x = rng.standard_normal(action.dim), rng.standard_normal(action.dim)
        reference = full_coorbit(action, w, x).values
        for h in range(action.order):
            np.testing.assert_allclose(full_coorbit(action, action.apply(h, w), x).values, reference,
                                       rtol=0, atol=1e-12 * (1 + np.linalg.norm(w) * np.linalg.norm(x)))

    @pytest.mark.parametrize("name, action", SMALL_ACTIONS)
    def test_sum_identity(self, name, action, rng):
        w, x = rng.standard_normal(action.dim), rng.standard_normal(action.dim)
        total = np.sum(full_coorbit(action, w, x).values)
        assert total == pytest.approx(np.dot(action.elements.sum(axis=0) @ w, x), abs=1e-12 * action.order * (1 + np.linalg.norm(w) * np.linalg.norm(x)))

    def test_output_non_increasing(self, rng):
        action = build_dihedral(6)
        for _ in range(100):
            values = full_coorbit(action, rng.standard_normal(6), rng.standard_normal(6)).values
            assert np.all(np.diff(values) <= 0)
