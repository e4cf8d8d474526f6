"""
Coorbit - Group-Invariant Embeddings via Sorted Coorbits
========================================================

A library and command-line tool that embeds vectors of ℝ^d invariantly under
a finite group of orthogonal matrices, using sorted coorbits:
- Coorbit filters and the max filter
- The quotient metric and orbit closure of finite datasets
- Bi-Lipschitz constants, separation checks and collision search
- Spectral window counts p_n and the selection plans they allow

Main Components
---------------
- **groups**: Group actions, built-in families, closure and verification
- **filters**: Window banks, selection sets, coorbit maps, reduction, embedding
- **orbits**: Datasets, quotient metric, orbit closure
- **planners**: Selection set strategies
- **services**: Analysis workflows and file I/O
- **state**: Run manifests for replay
- **cli**: Command-line handlers
- **utils**: Validation, linear algebra, seeding and formatting helpers
- **config**: Tolerances, defaults and exit codes

Usage
-----
Run the command-line tool with:
    python app.py --help
"""

from config.settings import (
    TOOL_VERSION,
    RANDOM_SEED,
    GROUP_TOL,
    COLLISION_FLOOR
)

__version__ = TOOL_VERSION

__all__ = [
    "RANDOM_SEED",
    "GROUP_TOL",
    "COLLISION_FLOOR",
]
