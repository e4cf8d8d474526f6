"""Window sampling, linear reduction and end-to-end embedding workflows."""

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .gamma_service import gamma_profile, plan_selection
from config.settings import RANDOM_SEED
from filters.base import SelectionSet, WindowBank
from filters.embedding import CoorbitEmbedding, EmbeddingConfig
from filters.reduction import LinearReduction
from groups.base import GroupAction
from orbits.dataset import Dataset
from planners.max_filter import MaxFilterPlanner
from utils.errors import DomainError
from utils.input_validation import validate_dimension
from utils.seeding import derive_seeds, make_rng

logger = logging.getLogger(__name__)

# Rows handed to each worker in embed_dataset
EMBED_CHUNK = 256


def sample_windows(d: int, p: int, seed: int = RANDOM_SEED) -> WindowBank:
    """p independent standard Gaussian windows in ℝ^d, re-drawing exact zeros."""
    d = validate_dimension(d)
    if int(p) != p or p < 1:
        raise DomainError("empty-selection", f"Window count p must be >= 1, got {p}.")
    rng = make_rng(seed)
    windows = rng.standard_normal((int(p), d))
    for i in np.flatnonzero(~np.any(windows, axis=1)):
        while not np.any(windows[i]):
            windows[i] = rng.standard_normal(d)
    return WindowBank(dim=d, windows=windows)


def sample_reduction(m: int, d: int, seed: int = RANDOM_SEED) -> LinearReduction:
    """Gaussian ℓ : ℝ^m → ℝ^{2d} with entries scaled by 1/√m.

    When m <= 2d the matrix has full column rank, so ℓ is injective.
    """
    d = validate_dimension(d)
    if int(m) != m or m < 1:
        raise DomainError("empty-selection", f"Input length m must be >= 1, got {m}.")
    rng = make_rng(seed)
    matrix = rng.standard_normal((2 * d, int(m))) / np.sqrt(m)
    reduction = LinearReduction(in_dim=int(m), out_dim=2 * d, matrix=matrix, seed=int(seed))
    if m <= 2 * d:
        assert reduction.is_injective, "sampled reduction lost column rank"
    return reduction


def plan_for(action: GroupAction, n: int, p: int | None) -> SelectionSet:
    """The selection used by the embed and collide workflows.

    n = 1 is the max filter with p >= 2d windows (p defaults to 2d);
    n >= 2 uses the rich-coorbit plan with p_n <= p <= 2d.

    Raises:
        DomainError: 'p-out-of-range', 'n-out-of-range'.
    """
    two_d = 2 * action.dim
    if n == 1:
        p = two_d if p is None else int(p)
        if p < two_d:
            raise DomainError("p-out-of-range", f"The max filter needs p >= 2d = {two_d}, got {p}.")
        return MaxFilterPlanner(p).plan(action.order)
    if p is None:
        p = gamma_profile(action).p_n(n)
    return plan_selection(action, n=n, p=p)


def build_config(group_spec: dict, action: GroupAction, n: int = 1, p: int | None = None,
                 seed: int = RANDOM_SEED, reduce: bool | None = None) -> EmbeddingConfig:
    """Plan S, sample windows and (when m > 2d, or if asked) sample ℓ.

    The window and reduction seeds are derived from the master seed so that
    the whole configuration is a function of (group, n, p, seed).
    """
    selection = plan_for(action, n, p)
    window_seed, reduction_seed = derive_seeds(seed, 2)
    bank = sample_windows(action.dim, selection.p, window_seed)
    if reduce is None:
        reduce = selection.m > 2 * action.dim
    reduction = sample_reduction(selection.m, action.dim, reduction_seed) if reduce else None
    logger.info("Embedding config: p=%d, m=%d, reduction=%s", selection.p, selection.m, reduce)
    return EmbeddingConfig(
        group_spec=dict(group_spec),
        bank=bank,
        selection=selection,
        reduction=reduction,
        seed=int(seed)
    )


def embed_point(config: EmbeddingConfig, action: GroupAction, x) -> np.ndarray:
    """Ψ(x) = ℓ(Φ_{w,S}(x)); the raw m-vector when config has no reduction.

    Raises:
        DomainError: 'config-inconsistent', 'dimension-mismatch'.
    """
    return CoorbitEmbedding(config, action).transform(x)


def embed_dataset(config: EmbeddingConfig, action: GroupAction, dataset: Dataset,
                  threads: int = 1) -> np.ndarray:
    """Embed every row of the dataset, order preserved.

    Returns:
        (len(dataset), output_dim) matrix; 0 rows for an empty dataset.
    """
    embedding = CoorbitEmbedding(config, action)
    if dataset.dim != action.dim:
        raise DomainError(
            "dimension-mismatch",
            f"Dataset dimension {dataset.dim} does not match action dimension {action.dim}."
        )
    if len(dataset) == 0:
        return np.zeros((0, embedding.output_dim))

    chunks = [dataset.points[k:k + EMBED_CHUNK] for k in range(0, len(dataset), EMBED_CHUNK)]
    if threads == 1 or len(chunks) == 1:
        blocks = [embedding.transform_many(chunk) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads or None) as executor:
            blocks = list(executor.map(embedding.transform_many, chunks))
    return np.vstack(blocks)
