import pytest

from planners import (
    FixedRankPlanner,
    MaxFilterPlanner,
    RichCoorbitPlanner,
    plan_fixed_ranks,
    plan_max_filter,
)
from utils.errors import DomainError

CYCLIC4_TABLE = {2: 6, 3: 5}


def test_max_filter_planner():
    sel = plan_max_filter(3)
    assert sel.per_window == ((1,), (1,), (1,))
    assert MaxFilterPlanner(2).plan(order=10).m == 2


def test_max_filter_needs_a_window():
    with pytest.raises(DomainError):
        MaxFilterPlanner(0)


def test_fixed_ranks():
    sel = plan_fixed_ranks([1, 3, 2], order=4)
    assert sel.per_window == ((1,), (3,), (2,))


def test_fixed_rank_beyond_order():
    with pytest.raises(DomainError) as excinfo:
        FixedRankPlanner([1, 5]).plan(order=4)
    assert excinfo.value.kind == "rank-out-of-range"


def test_fixed_rank_empty():
    with pytest.raises(DomainError) as excinfo:
        FixedRankPlanner([])
    assert excinfo.value.kind == "empty-selection"


@pytest.mark.parametrize("n, p, sizes", [
    (2, 6, (2, 2, 1, 1, 1, 1)),
    (2, 7, (2, 1, 1, 1, 1, 1, 1)),
    (3, 5, (3, 3, 3, 1, 1)),
    (3, 8, (1,) * 8),
])
def test_rich_coorbit_layout(n, p, sizes):
    planner = RichCoorbitPlanner(n=n, p=p, dim=4, p_table=CYCLIC4_TABLE)
    sel = planner.plan(order=4)
    assert sel.sizes == sizes
    assert sel.m == planner.m == (8 - p) * n + 2 * p - 8


def test_rich_coorbit_rejects_small_p():
    with pytest.raises(DomainError) as excinfo:
        RichCoorbitPlanner(n=3, p=4, dim=4, p_table=CYCLIC4_TABLE)
    assert excinfo.value.kind == "p-out-of-range"
    assert "[5, 8]" in excinfo.value.message


def test_rich_coorbit_rejects_n_beyond_order():
    planner = RichCoorbitPlanner(n=3, p=5, dim=4, p_table=CYCLIC4_TABLE)
    with pytest.raises(DomainError) as excinfo:
        planner.plan(order=2)
    assert excinfo.value.kind == "n-out-of-range"
