from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from config.settings import GROUP_TOL
from utils.errors import DomainError, ParseError
from utils.input_validation import check_index, check_vector, validate_dimension, validate_tolerance
from utils.linalg import permutation_of
from utils.tolerance_index import ToleranceIndex


@dataclass(frozen=True, eq=False)
class GroupAction:
    """A finite group of d×d orthogonal matrices acting on ℝ^d.

    Elements are stored as one read-only (N, d, d) array with the identity at
    index 0. Elements that are 0/1 permutation matrices carry an integer
    encoding ``perm`` with ``U x == x[perm]`` and are applied by indexing.

    Construction does not check the group law; use
    ``groups.verification.verify_group`` for that. The built-in families and
    ``close_under_product`` only ever produce verified groups.

    Attributes:
        dim: Ambient dimension d.
        elements: (N, d, d) array of group elements.
        perms: Per element, its permutation encoding or None.
        labels: Per element, a short display label.
        tol: Max-entry tolerance for matrix equality.
    """
    dim: int
    elements: np.ndarray
    perms: tuple = field(repr=False)
    labels: tuple = ()
    tol: float = GROUP_TOL

    @classmethod
    def from_matrices(cls, matrices, labels=None, tol: float = GROUP_TOL) -> 'GroupAction':
        """Wrap a list of matrices, moving an identity (if listed) to index 0.

        Args:
            matrices: Sequence of d×d arrays.
            labels: Optional display labels, one per matrix.
            tol: Matrix equality tolerance.

        Raises:
            DomainError: 'dimension-mismatch' on ragged or non-square input,
                'dimension-too-small' if d < 2,
                'tolerance-out-of-range' on a negative tol.
        """
        tol = validate_tolerance(tol)
        stack = np.array([np.asarray(m, dtype=float) for m in matrices], dtype=float)
        if stack.ndim != 3 or stack.shape[0] == 0 or stack.shape[1] != stack.shape[2]:
            raise DomainError(
                "dimension-mismatch",
                f"Expected a non-empty list of square matrices, got shape {stack.shape}."
            )
        dim = validate_dimension(stack.shape[1])
        labels = list(labels) if labels is not None else [f"g{k}" for k in range(len(stack))]
        if len(labels) != len(stack):
            raise DomainError("dimension-mismatch", "One label per matrix is required.")

        residuals = np.max(np.abs(stack - np.eye(dim)), axis=(1, 2))
        identity_at = int(np.argmin(residuals))
        if residuals[identity_at] <= tol and identity_at != 0:
            order = [identity_at] + [k for k in range(len(stack)) if k != identity_at]
            stack = stack[order]
            labels = [labels[k] for k in order]

        stack.setflags(write=False)
        perms = tuple(permutation_of(m, tol) for m in stack)
        return cls(dim=dim, elements=stack, perms=perms, labels=tuple(labels), tol=tol)

    @property
    def order(self) -> int:
        """Group order N."""
        return int(self.elements.shape[0])

    def element_kind(self, g: int) -> str:
        return "permutation" if self.perms[g] is not None else "generic"

    @property
    def is_permutation_action(self) -> bool:
        return all(p is not None for p in self.perms)

    def matrix(self, g: int) -> np.ndarray:
        return self.elements[check_index(g, self.order, "g")]

    def apply(self, g: int, x) -> np.ndarray:
        """Return U_g x, by coordinate indexing for permutation elements."""
        g = check_index(g, self.order, "g")
        x = check_vector(x, self.dim)
        perm = self.perms[g]
        if perm is not None:
            return x[perm]
        return self.elements[g] @ x

    def apply_dense(self, g: int, x) -> np.ndarray:
        """Return U_g x by matrix multiplication regardless of element kind."""
        g = check_index(g, self.order, "g")
        return self.elements[g] @ check_vector(x, self.dim)

    def orbit_matrix(self, x) -> np.ndarray:
        """(N, d) array whose g-th row is U_g x."""
        x = check_vector(x, self.dim)
        return self.elements @ x

    @cached_property
    def _index(self) -> tuple[ToleranceIndex, tuple]:
        # Duplicates are not stored, so map stored slots back to element positions
        index = ToleranceIndex(tol=self.tol)
        positions = []
        for g, m in enumerate(self.elements):
            _, inserted = index.add(m)
            if inserted:
                positions.append(g)
        return index, tuple(positions)

    def index_of(self, matrix) -> int | None:
        """Index of the first listed element equal to matrix within tol, or None."""
        index, positions = self._index
        found = index.find(np.asarray(matrix, dtype=float))
        return None if found is None else positions[found]

    @cached_property
    def composition_table(self) -> np.ndarray:
        """(N, N) table with entry [g, h] = index of U_g U_h, or -1 if unlisted."""
        n = self.order
        table = np.full((n, n), -1, dtype=np.int64)
        for g in range(n):
            for h in range(n):
                found = self.index_of(self.elements[g] @ self.elements[h])
                if found is not None:
                    table[g, h] = found
        table.setflags(write=False)
        return table

    def inverse_index(self, g: int) -> int:
        """Index of U_g⁻¹ = U_gᵀ.

        Raises:
            DomainError: 'not-a-group' if the transpose is not listed.
        """
        found = self.index_of(self.matrix(g).T)
        if found is None:
            raise DomainError("not-a-group", f"Inverse of element {g} is not listed.")
        return found

    def non_identity(self) -> range:
        return range(1, self.order)


class GroupFamily(ABC):
    """Base class for every group specification understood by the toolkit.

    Subclasses implement build() and declare the JSON fields they read in
    get_parameters(), which from_spec() uses to validate group spec files.
    """

    @abstractmethod
    def build(self) -> GroupAction:
        """Construct the GroupAction.

        Returns:
            GroupAction with the identity at index 0.
        """
        pass

    @staticmethod
    def get_parameters() -> dict:
        """Return the spec fields this family reads.

        Returns:
            dict: field name -> {'type', 'required', 'default', 'help'}.
        """
        return {
            'dim': {
                'type': 'int',
                'required': True,
                'default': None,
                'help': 'Ambient dimension d (>= 2)'
            }
        }

    @classmethod
    def from_spec(cls, spec: dict) -> 'GroupFamily':
        """Instantiate from a group spec dict, applying declared defaults.

        Raises:
            ParseError: if a required field is missing.
        """
        kwargs = {}
        for name, config in cls.get_parameters().items():
            if name in spec:
                kwargs[name] = spec[name]
            elif config['required']:
                raise ParseError(f"Group spec is missing required field '{name}'.")
            else:
                kwargs[name] = config['default']
        return cls(**kwargs)
