import numpy as np

from .base import GroupAction, GroupFamily
from utils.input_validation import validate_dimension


def build_sign_flip(d: int) -> GroupAction:
    """The reflection group {I, −I} acting on ℝ^d.

    Raises:
        DomainError: 'dimension-too-small' if d < 2.
    """
    d = validate_dimension(d)
    return GroupAction.from_matrices([np.eye(d), -np.eye(d)], labels=["identity", "negate"])


class SignFlipGroup(GroupFamily):
    """Global sign symmetry x ↦ ±x, N = 2."""

    def __init__(self, dim: int) -> None:
        self.dim = dim

    def build(self) -> GroupAction:
        return build_sign_flip(self.dim)
