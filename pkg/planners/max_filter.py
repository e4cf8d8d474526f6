from .base import SelectionPlanner
from filters.base import SelectionSet
from utils.errors import DomainError


class MaxFilterPlanner(SelectionPlanner):
    """Keep only the top coorbit entry of every window, S_i = {1}.

    Attributes:
        p (int): Number of windows.
    """

    def __init__(self, p: int) -> None:
        if int(p) != p or p < 1:
            raise DomainError("empty-selection", f"Window count p must be >= 1, got {p}.")
        self.p = int(p)

    def plan(self, order: int) -> SelectionSet:
        return SelectionSet.singletons(self.p)


def plan_max_filter(p: int) -> SelectionSet:
    return MaxFilterPlanner(p).plan(order=1)
