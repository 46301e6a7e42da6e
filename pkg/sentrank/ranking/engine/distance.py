"""Sentence distances.

Word mover's distance between sentence bags, its relaxed lower bound and
the two similarity kernels built on top of it. Production code only uses
the relaxed distance, the exact one is kept as an oracle.
"""

# Utilities
import numpy as np
from scipy.optimize import linprog
from scipy.spatial.distance import cdist
from typing import Sequence

# Models
from sentrank.ranking.models import SentenceBag

# Exceptions
from sentrank.utils.exceptions import DistanceError


def _check(a: SentenceBag, b: SentenceBag) -> None:
    if a.is_empty or b.is_empty:
        raise DistanceError('Distances are not defined for an empty sentence bag.')


def _costs(a: SentenceBag, b: SentenceBag) -> np.ndarray:
    return cdist(a.vectors, b.vectors, metric='euclidean')


def wmd_exact(a: SentenceBag, b: SentenceBag) -> float:
    """Returns the word mover's distance, solving the transportation problem.

    Costs are the Euclidean distances between unit vectors, supplies the
    weights of a and demands the weights of b.
    """

    _check(a, b)
    costs = _costs(a, b)
    m, k = costs.shape

    supplies = np.zeros((m, m * k))
    for i in range(m):
        supplies[i, i * k:(i + 1) * k] = 1.0

    demands = np.zeros((k, m * k))
    for j in range(k):
        demands[j, j::k] = 1.0

    result = linprog(
        costs.ravel(),
        A_eq=np.vstack([supplies, demands]),
        b_eq=np.concatenate([a.weights, b.weights]),
        bounds=(0, None),
        method='highs',
    )
    if not result.success:
        raise DistanceError(f'Transportation problem could not be solved: {result.message}')

    return max(0.0, float(result.fun))


def wmd_relaxed(a: SentenceBag, b: SentenceBag) -> float:
    """Returns the relaxed word mover's distance.

    Each side moves the whole weight of every unit to its nearest
    counterpart; the larger of both one-sided costs is kept.
    """

    _check(a, b)
    costs = _costs(a, b)

    forward = float(np.dot(a.weights, costs.min(axis=1)))
    backward = float(np.dot(b.weights, costs.min(axis=0)))
    return max(forward, backward)


def reciprocal_similarity(distance):
    """1 / (1 + distance). Infinite distances give 0."""

    return 1.0 / (1.0 + np.asarray(distance, dtype=np.float64))


def rbf_similarity(distance, gamma: float = 1.0):
    """exp(-gamma * distance^2). Infinite distances give 0."""

    if gamma <= 0:
        raise ValueError('gamma must be positive.')

    distance = np.asarray(distance, dtype=np.float64)
    return np.exp(-gamma * np.square(distance))


def sim_reciprocal(a: SentenceBag, b: SentenceBag) -> float:
    return float(reciprocal_similarity(wmd_relaxed(a, b)))


def sim_rbf(a: SentenceBag, b: SentenceBag, gamma: float = 1.0) -> float:
    return float(rbf_similarity(wmd_relaxed(a, b), gamma))


def pairwise_distances(bags: Sequence[SentenceBag]) -> np.ndarray:
    """Returns the symmetric matrix of relaxed distances between bags.

    The diagonal is 0. A pair involving an empty bag is at infinite
    distance.
    """

    n = len(bags)
    distances = np.zeros((n, n))

    for i in range(n):
        for j in range(i + 1, n):
            if bags[i].is_empty or bags[j].is_empty:
                value = np.inf
            else:
                value = wmd_relaxed(bags[i], bags[j])
            distances[i, j] = distances[j, i] = value

    return distances
