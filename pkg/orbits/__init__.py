from .dataset import Dataset
from .metric import (
    is_invariant,
    orbit,
    orbit_closure,
    orbit_representatives,
    orbit_with_elements,
    pairwise_quotient_distances,
    quotient_distance,
    require_invariant,
    same_orbit,
)

__all__ = [
    'Dataset',
    'quotient_distance',
    'pairwise_quotient_distances',
    'same_orbit',
    'orbit',
    'orbit_with_elements',
    'orbit_closure',
    'is_invariant',
    'require_invariant',
    'orbit_representatives',
]
