from .base import SelectionPlanner
from filters.base import SelectionSet
from utils.errors import DomainError


class FixedRankPlanner(SelectionPlanner):
    """One fixed coorbit entry per window, S_i = {j_i}.

    Rank 1 everywhere is the max filter; with p >= 2d generic windows any
    fixed choice of ranks still separates orbits.

    Attributes:
        ranks (tuple): One 1-based rank per window.
    """

    def __init__(self, ranks) -> None:
        ranks = tuple(int(j) for j in ranks)
        if not ranks:
            raise DomainError("empty-selection", "At least one rank is required.")
        self.ranks = ranks

    def plan(self, order: int) -> SelectionSet:
        out_of_range = [j for j in self.ranks if not 1 <= j <= order]
        if out_of_range:
            raise DomainError(
                "rank-out-of-range",
                f"Ranks {out_of_range} fall outside [1, {order}]."
            )
        return SelectionSet(per_window=tuple((j,) for j in self.ranks))


def plan_fixed_ranks(ranks, order: int) -> SelectionSet:
    return FixedRankPlanner(ranks).plan(order)
