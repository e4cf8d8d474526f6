from .base import CoorbitVector, InvariantMap, SelectionSet, WindowBank
from .coorbit import (
    CoorbitFilter,
    MaxFilter,
    coorbit_argsort,
    coorbit_entry,
    coorbit_map,
    full_coorbit,
    max_filter,
    sort_descending,
)
from .embedding import CoorbitEmbedding, EmbeddingConfig
from .reduction import LinearReduction

__all__ = [
    'InvariantMap',
    'WindowBank',
    'SelectionSet',
    'CoorbitVector',
    'CoorbitFilter',
    'MaxFilter',
    'CoorbitEmbedding',
    'EmbeddingConfig',
    'LinearReduction',
    'sort_descending',
    'full_coorbit',
    'coorbit_entry',
    'coorbit_argsort',
    'coorbit_map',
    'max_filter',
]
