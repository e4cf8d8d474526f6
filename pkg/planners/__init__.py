from .base import SelectionPlanner
from .fixed_rank import FixedRankPlanner, plan_fixed_ranks
from .max_filter import MaxFilterPlanner, plan_max_filter
from .rich_coorbit import RichCoorbitPlanner

__all__ = [
    'SelectionPlanner',
    'MaxFilterPlanner',
    'FixedRankPlanner',
    'RichCoorbitPlanner',
    'plan_max_filter',
    'plan_fixed_ranks',
]
