import logging
from dataclasses import dataclass

import numpy as np

from .base import InvariantMap, SelectionSet, WindowBank
from .coorbit import CoorbitFilter
from .reduction import LinearReduction
from groups.base import GroupAction
from utils.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EmbeddingConfig:
    """Everything needed to rebuild Ψ = ℓ ∘ Φ_{w,S}.

    Attributes:
        group_spec: The group spec dict the action was built from.
        bank: Window bank w.
        selection: Selection set S.
        reduction: Linear map ℓ, or None for identity pass-through.
        seed: Master seed the bank and reduction were derived from.
    """
    group_spec: dict
    bank: WindowBank
    selection: SelectionSet
    reduction: LinearReduction | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.selection.p != self.bank.p:
            raise DomainError(
                "config-inconsistent",
                f"Selection has {self.selection.p} rank lists for {self.bank.p} windows."
            )
        if self.reduction is not None and self.reduction.in_dim != self.selection.m:
            raise DomainError(
                "config-inconsistent",
                f"Reduction expects {self.reduction.in_dim} inputs, selection gives m={self.selection.m}."
            )
        spec_dim = self.group_spec.get('dim') if isinstance(self.group_spec, dict) else None
        if spec_dim is not None and int(spec_dim) != self.bank.dim:
            raise DomainError(
                "config-inconsistent",
                f"Group spec dimension {spec_dim} differs from bank dimension {self.bank.dim}."
            )

    @property
    def output_dim(self) -> int:
        return self.selection.m if self.reduction is None else self.reduction.out_dim


class CoorbitEmbedding(InvariantMap):
    """The end-to-end invariant embedding Ψ(x) = ℓ(Φ_{w,S}(x))."""

    def __init__(self, config: EmbeddingConfig, action: GroupAction) -> None:
        if config.bank.dim != action.dim:
            raise DomainError(
                "config-inconsistent",
                f"Bank dimension {config.bank.dim} differs from action dimension {action.dim}."
            )
        self.config = config
        self.action = action
        self.coorbit_filter = CoorbitFilter(action, config.bank, config.selection)
        logger.debug(
            "Embedding ready: m=%d, output_dim=%d, reduction=%s",
            config.selection.m, self.output_dim, config.reduction is not None
        )

    @property
    def dim(self) -> int:
        return self.action.dim

    @property
    def output_dim(self) -> int:
        return self.config.output_dim

    def transform(self, x) -> np.ndarray:
        features = self.coorbit_filter.transform(x)
        if self.config.reduction is None:
            return features
        return self.config.reduction.apply(features)

    def transform_many(self, points) -> np.ndarray:
        features = self.coorbit_filter.transform_many(points)
        if self.config.reduction is None:
            return features
        return self.config.reduction.apply_many(features)
