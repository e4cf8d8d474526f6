import logging
from dataclasses import dataclass, field

import numpy as np

from .base import GroupAction
from config.settings import MIN_DIM

logger = logging.getLogger(__name__)

# Offending pairs listed per check
MAX_OFFENDERS = 20


@dataclass
class CheckResult:
    """Outcome of one group-law check.

    Attributes:
        passed: Whether the check holds at the action's tolerance.
        max_residual: Largest max-entry residual observed.
        offenders: Element indices (or index pairs) that fail.
        detail: Extra per-check figures.
    """
    passed: bool
    max_residual: float
    offenders: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    passed: bool
    dim: int
    order: int
    tol: float
    checks: dict


def _nearest_residual(action: GroupAction, matrix: np.ndarray) -> float:
    return float(np.min(np.max(np.abs(action.elements - matrix), axis=(1, 2))))


def verify_group(action: GroupAction) -> VerificationReport:
    """Check the group law of a GroupAction.

    Checks orthogonality, identity at index 0, closure, presence of
    inverses, absence of duplicates and d >= 2. Failures are reported, never
    raised.

    Args:
        action: GroupAction to verify.

    Returns:
        VerificationReport with one CheckResult per check.
    """
    tol = action.tol
    elements = action.elements
    n = action.order
    eye = np.eye(action.dim)

    orth = np.max(np.abs(np.einsum('gji,gjk->gik', elements, elements) - eye), axis=(1, 2))
    orthogonality = CheckResult(
        passed=bool(np.all(orth <= tol)),
        max_residual=float(np.max(orth)),
        offenders=[int(g) for g in np.flatnonzero(orth > tol)[:MAX_OFFENDERS]]
    )

    identity_residual = float(np.max(np.abs(elements[0] - eye)))
    identity = CheckResult(passed=identity_residual <= tol, max_residual=identity_residual)

    closure_residual = 0.0
    closure_offenders = []
    for g in range(n):
        for h in range(n):
            product = elements[g] @ elements[h]
            found = action.index_of(product)
            if found is not None:
                residual = float(np.max(np.abs(elements[found] - product)))
            else:
                residual = _nearest_residual(action, product)
                if len(closure_offenders) < MAX_OFFENDERS:
                    closure_offenders.append([g, h])
            closure_residual = max(closure_residual, residual)
    closure = CheckResult(
        passed=closure_residual <= tol,
        max_residual=closure_residual,
        offenders=closure_offenders
    )

    inverse_residual = 0.0
    inverse_offenders = []
    for g in range(n):
        residual = _nearest_residual(action, elements[g].T)
        inverse_residual = max(inverse_residual, residual)
        if residual > tol and len(inverse_offenders) < MAX_OFFENDERS:
            inverse_offenders.append(g)
    inverses = CheckResult(
        passed=inverse_residual <= tol,
        max_residual=inverse_residual,
        offenders=inverse_offenders
    )

    # Smallest distance between two distinct listed elements
    duplicate_gap = np.inf
    duplicate_residual = 0.0
    duplicate_offenders = []
    for g in range(n - 1):
        gaps = np.max(np.abs(elements[g + 1:] - elements[g]), axis=(1, 2))
        duplicate_gap = min(duplicate_gap, float(np.min(gaps)))
        for h in np.flatnonzero(gaps <= tol):
            duplicate_residual = max(duplicate_residual, float(gaps[h]))
            if len(duplicate_offenders) < MAX_OFFENDERS:
                duplicate_offenders.append([g, int(g + 1 + h)])
    duplicates = CheckResult(
        passed=not duplicate_offenders,
        max_residual=duplicate_residual,
        offenders=duplicate_offenders,
        detail={"min_gap": None if n < 2 else duplicate_gap}
    )

    dimension = CheckResult(passed=action.dim >= MIN_DIM, max_residual=0.0)

    checks = {
        'orthogonality': orthogonality,
        'identity': identity,
        'closure': closure,
        'inverses': inverses,
        'duplicates': duplicates,
        'dimension': dimension,
    }
    passed = all(check.passed for check in checks.values())
    if not passed:
        failed = [name for name, check in checks.items() if not check.passed]
        logger.debug("Group verification failed: %s", ", ".join(failed))
    return VerificationReport(passed=passed, dim=action.dim, order=n, tol=tol, checks=checks)
