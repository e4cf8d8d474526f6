"""Service layer for analysis workflows and file I/O.

This module contains services that coordinate between the command-line
layer and the library packages: bounds and separation scans, the spectral
window-count analysis, collision search, embedding and data loading.
"""

from .bounds_service import (
    BoundsReport,
    lipschitz_bounds,
    lipschitz_bounds_bank,
    separation_check,
    window_margin,
)
from .collision_service import CollisionObjective, CollisionReport, collision_search
from .data_service import DataService
from .embedding_service import (
    build_config,
    embed_dataset,
    embed_point,
    plan_for,
    sample_reduction,
    sample_windows,
)
from .gamma_service import ElementSpectrum, GammaProfile, gamma_profile, plan_selection

__all__ = [
    'DataService',
    'BoundsReport',
    'lipschitz_bounds',
    'lipschitz_bounds_bank',
    'separation_check',
    'window_margin',
    'GammaProfile',
    'ElementSpectrum',
    'gamma_profile',
    'plan_selection',
    'CollisionReport',
    'CollisionObjective',
    'collision_search',
    'sample_windows',
    'sample_reduction',
    'plan_for',
    'build_config',
    'embed_point',
    'embed_dataset',
]
