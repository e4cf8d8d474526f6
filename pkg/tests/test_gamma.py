import numpy as np
import pytest

from conftest import BUILTIN_ACTIONS
from groups import GroupAction, build_cyclic_shift, build_sign_flip, close_under_product
from oracles import gamma_oracle
from services.gamma_service import gamma_profile, plan_selection
from utils.errors import DomainError


class TestGammaProfile:

    @pytest.mark.parametrize("d", [2, 3, 6])
    def test_sign_flip(self, d):
        profile = gamma_profile(build_sign_flip(d))
        assert profile.gamma == (0,)
        assert profile.p_table == {2: 2 * d}
        assert profile.p_1 == 2 * d

    def test_cyclic_four(self, cyclic4):
        profile = gamma_profile(cyclic4)
        assert {e.label: e.min_rank for e in profile.per_element} == {'shift1': 3, 'shift2': 2, 'shift3': 3}
        assert profile.gamma == (3, 3, 2)
        assert profile.p_table == {2: 6, 3: 5}
        assert profile.p_n(1) == 8

    def test_spectra_are_recorded(self, cyclic4):
        spectra = {e.label: e.spectrum for e in gamma_profile(cyclic4).per_element}
        assert spectra['shift2'] == (1.0, -1.0)
        assert spectra['shift1'] == (1.0, -1.0)

    def test_unknown_n(self, cyclic4):
        with pytest.raises(DomainError) as excinfo:
            gamma_profile(cyclic4).p_n(4)
        assert excinfo.value.kind == "n-out-of-range"

    def test_trivial_group(self):
        with pytest.raises(DomainError) as excinfo:
            gamma_profile(GroupAction.from_matrices([np.eye(3)]))
        assert excinfo.value.kind == "trivial-group"

    def test_rotation_without_real_eigenvalues(self):
        profile = gamma_profile(close_under_product([np.array([[0.0, -1.0], [1.0, 0.0]])]))
        values = {e.index: e.min_rank for e in profile.per_element}
        # The half turn is -I; the quarter turns have no real eigenvalue
        assert sorted(values.values()) == [0, 2, 2]
        assert profile.gamma == (2, 2, 0)

    @pytest.mark.parametrize("name, action", BUILTIN_ACTIONS)
    def test_matches_oracle(self, name, action):
        assert gamma_profile(action).gamma == gamma_oracle(action.elements)

    @pytest.mark.parametrize("name, action", BUILTIN_ACTIONS)
    def test_window_counts(self, name, action):
        profile = gamma_profile(action)
        assert all(0 <= value <= action.dim for value in profile.gamma)
        assert list(profile.gamma) == sorted(profile.gamma, reverse=True)
        ns = sorted(profile.p_table)
        for n in ns:
            assert profile.p_table[n] >= action.dim + 1
        for n, n_next in zip(ns, ns[1:]):
            assert profile.p_table[n_next] <= profile.p_table[n]


class TestPlanSelection:

    def test_four_dim_six_windows_two_entries(self, cyclic4):
        sel = plan_selection(cyclic4, n=2, p=6)
        assert sel.sizes == (2, 2, 1, 1, 1, 1)
        assert sel.m == 8
        assert sel.per_window[0] == (1, 2)

    def test_full_window_count_is_max_filter(self, cyclic4):
        sel = plan_selection(cyclic4, n=2, p=8)
        assert sel.per_window == ((1,),) * 8
        assert sel.m == 8

    def test_below_bound(self, cyclic4):
        with pytest.raises(DomainError) as excinfo:
            plan_selection(cyclic4, n=2, p=5)
        assert excinfo.value.kind == "p-out-of-range"

    def test_above_two_d(self, cyclic4):
        with pytest.raises(DomainError) as excinfo:
            plan_selection(cyclic4, n=2, p=9)
        assert excinfo.value.kind == "p-out-of-range"

    def test_n_out_of_range(self, cyclic4):
        with pytest.raises(DomainError) as excinfo:
            plan_selection(cyclic4, n=4, p=6)
        assert excinfo.value.kind == "n-out-of-range"

    def test_dimension_override_must_match(self, cyclic4):
        with pytest.raises(DomainError) as excinfo:
            plan_selection(cyclic4, n=2, p=6, d=5)
        assert excinfo.value.kind == "config-inconsistent"

    def test_window_count_formula(self):
        action = build_cyclic_shift(6)
        profile = gamma_profile(action)
        for n, p_min in profile.p_table.items():
            for p in range(p_min, 13):
                sel = plan_selection(action, n=n, p=p, profile=profile)
                assert sel.m == (12 - p) * n + 2 * p - 12
                assert sel.p == p
