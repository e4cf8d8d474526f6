"""Spectral window-count analysis and selection planning."""

import logging
from dataclasses import dataclass, field

from config.settings import RANK_RTOL
from filters.base import SelectionSet
from groups.base import GroupAction
from planners.rich_coorbit import RichCoorbitPlanner
from utils.errors import DomainError
from utils.linalg import min_rank_over_spectrum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ElementSpectrum:
    index: int
    label: str
    spectrum: tuple
    min_rank: int


@dataclass(frozen=True)
class GammaProfile:
    """γ and the window counts p_n it implies.

    Attributes:
        dim: Ambient dimension d.
        order: Group order N.
        gamma: Per-element minimal ranks over g ≠ I, sorted non-increasing.
        per_element: ElementSpectrum for every non-identity element, in element order.
        p_table: n -> p_n = 2d − γ_{N−n+1} (1-based γ) for n = 2, ..., max(2, N − 1).
        p_1: 2d, the max-filter window count.
    """
    dim: int
    order: int
    gamma: tuple
    per_element: tuple = field(repr=False)
    p_table: dict = field(default_factory=dict)
    p_1: int = 0

    def p_n(self, n: int) -> int:
        if n == 1:
            return self.p_1
        if n not in self.p_table:
            raise DomainError("n-out-of-range", f"n={n} has no window bound; valid n are {sorted(self.p_table)}.")
        return self.p_table[n]


def gamma_profile(action: GroupAction, rtol: float = RANK_RTOL) -> GammaProfile:
    """Compute γ from the real spectra of the non-identity elements.

    For each g ≠ I the value is min over λ ∈ Sp(g) of rank[U_g − λI], or d
    when U_g has no real eigenvalue.

    Raises:
        DomainError: 'trivial-group' if N = 1, 'not-orthogonal'.
    """
    n_order, dim = action.order, action.dim
    if n_order < 2:
        raise DomainError("trivial-group", "The trivial group has no non-identity elements.")

    per_element = []
    for g in action.non_identity():
        spectrum, value = min_rank_over_spectrum(action.elements[g], rtol=rtol)
        label = action.labels[g] if action.labels else f"g{g}"
        per_element.append(ElementSpectrum(index=g, label=label, spectrum=tuple(spectrum), min_rank=value))

    gamma = tuple(sorted((e.min_rank for e in per_element), reverse=True))
    # gamma[N - n] is the 1-based entry γ_{N-n+1}
    p_table = {n: 2 * dim - gamma[n_order - n] for n in range(2, max(2, n_order - 1) + 1)}

    if all(e.spectrum for e in per_element):
        assert all(p >= dim + 1 for p in p_table.values()), f"p_n < d + 1 in {p_table}"
    elif any(p < dim + 1 for p in p_table.values()):
        logger.warning("Elements without real eigenvalues push p_n below d + 1: %s", p_table)

    logger.debug("gamma=%s p_table=%s", gamma, p_table)
    return GammaProfile(
        dim=dim,
        order=n_order,
        gamma=gamma,
        per_element=tuple(per_element),
        p_table=p_table,
        p_1=2 * dim
    )


def plan_selection(action: GroupAction, n: int, p: int, d: int | None = None,
                   profile: GammaProfile | None = None) -> SelectionSet:
    """Selection set trading windows for coorbit entries.

    The first 2d − p windows get S_i = {1, ..., n}, the rest S_i = {1}.

    Args:
        action: Group action.
        n: Entries per rich window.
        p: Window count, p_n <= p <= 2d.
        d: Ambient dimension, defaults to action.dim.
        profile: Precomputed GammaProfile of action.

    Raises:
        DomainError: 'n-out-of-range', 'p-out-of-range', 'config-inconsistent'.
    """
    dim = action.dim if d is None else int(d)
    if dim != action.dim:
        raise DomainError("config-inconsistent", f"d={dim} differs from the action dimension {action.dim}.")
    profile = profile or gamma_profile(action)
    planner = RichCoorbitPlanner(n=n, p=p, dim=dim, p_table=profile.p_table)
    return planner.plan(action.order)
