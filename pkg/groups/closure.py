import logging
from collections import deque

import numpy as np

from .base import GroupAction, GroupFamily
from config.settings import CLOSURE_N_MAX, GROUP_TOL
from utils.errors import DomainError, ParseError
from utils.input_validation import validate_cap, validate_dimension, validate_tolerance
from utils.linalg import check_orthogonal
from utils.tolerance_index import ToleranceIndex

logger = logging.getLogger(__name__)


def close_under_product(
    generators,
    n_max: int = CLOSURE_N_MAX,
    tol: float = GROUP_TOL
) -> GroupAction:
    """Generate the finite matrix group spanned by orthogonal generators.

    Breadth-first closure under left multiplication by the generators,
    starting from the identity. New products are deduplicated with a
    rounding-grid hash and confirmed by max-entry distance.

    Args:
        generators: Non-empty list of d×d orthogonal matrices.
        n_max: Largest group order accepted.
        tol: Orthogonality and matrix-equality tolerance.

    Returns:
        GroupAction with the identity at index 0, elements in discovery order.

    Raises:
        DomainError: 'not-orthogonal' naming the offending generator index,
            'closure-exceeds-cap' if the group order would exceed n_max,
            'cap-out-of-range' or 'tolerance-out-of-range' for bad arguments.
        ParseError: if n_max or tol is not a number.
    """
    n_max = validate_cap(n_max)
    tol = validate_tolerance(tol)
    if len(generators) == 0:
        raise DomainError("dimension-mismatch", "At least one generator is required.")

    gens = []
    for i, gen in enumerate(generators):
        try:
            gens.append(check_orthogonal(gen, tol=tol, name=f"generator {i}"))
        except DomainError as e:
            if e.kind == "not-orthogonal":
                raise DomainError("not-orthogonal", f"generator index {i}: {e.message}") from e
            raise
    dim = validate_dimension(gens[0].shape[0])
    if any(gen.shape != (dim, dim) for gen in gens):
        raise DomainError("dimension-mismatch", "Generators must share one dimension.")

    index = ToleranceIndex(tol=tol)
    elements = [np.eye(dim)]
    index.add(elements[0])
    queue = deque([0])

    while queue:
        current = elements[queue.popleft()]
        for gen in gens:
            product = gen @ current
            _, inserted = index.add(product)
            if not inserted:
                continue
            if len(elements) + 1 > n_max:
                raise DomainError(
                    "closure-exceeds-cap",
                    f"Group order exceeds n_max={n_max}; the generators may span an infinite group."
                )
            elements.append(product)
            queue.append(len(elements) - 1)

    logger.debug("Closed %d generators in dimension %d to a group of order %d", len(gens), dim, len(elements))
    labels = ["identity"] + [f"g{k}" for k in range(1, len(elements))]
    return GroupAction.from_matrices(elements, labels=labels, tol=tol)


def _parse_matrices(matrices, dim: int) -> list[np.ndarray]:
    if not isinstance(matrices, list) or not matrices:
        raise ParseError("Field 'matrices' must be a non-empty list of row-major matrices.")
    parsed = []
    for k, m in enumerate(matrices):
        try:
            arr = np.array(m, dtype=float)
        except (TypeError, ValueError) as e:
            raise ParseError(f"Matrix {k} is not numeric: {e}") from e
        if arr.shape != (dim, dim):
            raise ParseError(f"Matrix {k} has shape {arr.shape}, expected ({dim}, {dim}).")
        parsed.append(arr)
    return parsed


class CustomGroup(GroupFamily):
    """An explicit list of matrices, taken as given.

    The group law is not enforced here; run verify_group on the result.
    """

    def __init__(self, dim: int, matrices: list, tol: float = GROUP_TOL) -> None:
        self.dim = dim
        self.matrices = _parse_matrices(matrices, dim)
        self.tol = validate_tolerance(tol)

    def build(self) -> GroupAction:
        return GroupAction.from_matrices(self.matrices, tol=self.tol)

    @staticmethod
    def get_parameters() -> dict:
        return {
            'dim': {
                'type': 'int',
                'required': True,
                'default': None,
                'help': 'Ambient dimension d (>= 2)'
            },
            'matrices': {
                'type': 'matrix_list',
                'required': True,
                'default': None,
                'help': 'Every group element, row-major'
            },
            'tol': {
                'type': 'float',
                'required': False,
                'default': GROUP_TOL,
                'help': 'Matrix equality tolerance'
            }
        }


class GeneratedGroup(GroupFamily):
    """The group generated by a list of orthogonal matrices."""

    def __init__(
        self,
        dim: int,
        matrices: list,
        n_max: int = CLOSURE_N_MAX,
        tol: float = GROUP_TOL
    ) -> None:
        self.dim = dim
        self.generators = _parse_matrices(matrices, dim)
        self.n_max = validate_cap(n_max)
        self.tol = validate_tolerance(tol)

    def build(self) -> GroupAction:
        return close_under_product(self.generators, n_max=self.n_max, tol=self.tol)

    @staticmethod
    def get_parameters() -> dict:
        return {
            'dim': {
                'type': 'int',
                'required': True,
                'default': None,
                'help': 'Ambient dimension d (>= 2)'
            },
            'matrices': {
                'type': 'matrix_list',
                'required': True,
                'default': None,
                'help': 'Generators, row-major'
            },
            'n_max': {
                'type': 'int',
                'required': False,
                'default': CLOSURE_N_MAX,
                'help': 'Largest group order accepted'
            },
            'tol': {
                'type': 'float',
                'required': False,
                'default': GROUP_TOL,
                'help': 'Orthogonality and equality tolerance'
            }
        }
