from abc import ABC, abstractmethod

from filters.base import SelectionSet


class SelectionPlanner(ABC):
    """
    Abstract base class for all selection planners.
    """

    @abstractmethod
    def plan(self, order: int) -> SelectionSet:
        """
        Choose the coorbit ranks S_i for every window.

        Args:
            order: Group order N; every rank must lie in [1, N].

        Returns:
            SelectionSet with one rank list per window.
        """
        pass
