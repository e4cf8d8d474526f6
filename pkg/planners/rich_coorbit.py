import logging

from .base import SelectionPlanner
from filters.base import SelectionSet
from utils.errors import DomainError

logger = logging.getLogger(__name__)


class RichCoorbitPlanner(SelectionPlanner):
    """Trade windows for coorbit entries: n entries from the first windows.

    With p windows, p_n <= p <= 2d, the first 2d − p windows keep their top n
    coorbit entries and the remaining 2p − 2d windows keep only their
    maximum, for m = (2d − p)n + 2p − 2d coordinates in total.

    Attributes:
        n (int): Entries kept per rich window (2 <= n <= N − 1).
        p (int): Window count.
        dim (int): Ambient dimension d.
        p_table (dict): n -> p_n, the minimal admissible window counts.
    """

    def __init__(self, n: int, p: int, dim: int, p_table: dict) -> None:
        self.n = int(n)
        self.p = int(p)
        self.dim = int(dim)
        self.p_table = {int(k): int(v) for k, v in p_table.items()}

        if self.n not in self.p_table:
            raise DomainError(
                "n-out-of-range",
                f"n={self.n} has no window bound; valid n are {sorted(self.p_table)}."
            )
        p_min, p_max = self.p_table[self.n], 2 * self.dim
        if not p_min <= self.p <= p_max:
            raise DomainError(
                "p-out-of-range",
                f"p={self.p} must lie in [p_{self.n}, 2d] = [{p_min}, {p_max}]."
            )

    @property
    def m(self) -> int:
        return (2 * self.dim - self.p) * self.n + 2 * self.p - 2 * self.dim

    def plan(self, order: int) -> SelectionSet:
        if self.n > order:
            raise DomainError("n-out-of-range", f"n={self.n} exceeds the group order {order}.")
        n_rich = 2 * self.dim - self.p
        rich = tuple(range(1, self.n + 1))
        selection = SelectionSet(
            per_window=(rich,) * n_rich + ((1,),) * (self.p - n_rich)
        )
        assert selection.m == self.m
        logger.debug("Planned %d rich windows of %d entries and %d singletons, m=%d",
                     n_rich, self.n, self.p - n_rich, selection.m)
        return selection
