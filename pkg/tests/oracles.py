"""Independent brute-force references used to cross-check the library."""

from fractions import Fraction
from itertools import product

import numpy as np


def exact_rank(matrix) -> int:
    """Rank of an integer matrix by fraction-exact Gaussian elimination."""
    rows = [[Fraction(int(round(v))) for v in row] for row in np.asarray(matrix)]
    rank, n_cols = 0, len(rows[0]) if rows else 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] / rows[rank][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def gamma_oracle(elements) -> tuple:
    """γ from numpy.linalg.eig and exact elimination, for integer-valued elements."""
    d = elements.shape[1]
    values = []
    for u in elements[1:]:
        eigenvalues = np.linalg.eig(u)[0]
        real = {int(np.sign(v.real)) for v in eigenvalues if abs(v.imag) < 1e-8}
        ranks = [exact_rank(u - lam * np.eye(d)) for lam in real]
        values.append(min(ranks) if ranks else d)
    return tuple(sorted(values, reverse=True))


def quotient_distance_oracle(elements, x, y) -> float:
    return min(float(np.sqrt(np.sum((x - u @ y) ** 2))) for u in elements)


def lipschitz_oracle(elements, w, j, points) -> tuple[float, float]:
    """(a_w, b_w) over every pair of points in distinct orbits, by direct enumeration."""
    def phi(x):
        return sorted((float(np.dot(u @ w, x)) for u in elements), reverse=True)[j - 1]

    ratios = []
    for x, y in product(points, points):
        distance = quotient_distance_oracle(elements, x, y)
        if distance > 1e-9:
            ratios.append(abs(phi(x) - phi(y)) / distance)
    return min(ratios), max(ratios)
