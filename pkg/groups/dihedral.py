import numpy as np

from .base import GroupAction, GroupFamily
from .cyclic import shift_matrix
from utils.input_validation import validate_dimension


def reversal_matrix(dim: int) -> np.ndarray:
    """Permutation matrix reversing coordinate order."""
    return np.eye(dim)[::-1].copy()


def build_dihedral(d: int) -> GroupAction:
    """Dihedral group of order 2d generated by the coordinate cycle and reversal.

    Elements are ordered identity, shift1 ... shift(d-1), then the
    reflections reflect_k = shift_k ∘ reversal for k = 0 ... d-1.

    Raises:
        DomainError: 'dimension-too-small' if d < 3 (for d = 2 reversal
            coincides with the shift and the group collapses to order 2).
    """
    d = validate_dimension(d, minimum=3)
    reversal = reversal_matrix(d)
    shifts = [shift_matrix(d, k) for k in range(d)]
    matrices = shifts + [s @ reversal for s in shifts]
    labels = ["identity"] + [f"shift{k}" for k in range(1, d)] + [f"reflect{k}" for k in range(d)]
    return GroupAction.from_matrices(matrices, labels=labels)


class DihedralGroup(GroupFamily):
    """Symmetries of the d-cycle acting on coordinates, N = 2d."""

    def __init__(self, dim: int) -> None:
        self.dim = dim

    def build(self) -> GroupAction:
        return build_dihedral(self.dim)

    @staticmethod
    def get_parameters() -> dict:
        return {
            'dim': {
                'type': 'int',
                'required': True,
                'default': None,
                'help': 'Ambient dimension d (>= 3)'
            }
        }
