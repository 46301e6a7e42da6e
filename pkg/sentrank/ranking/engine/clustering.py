"""Subtopic clustering of sentences.

Spectral clustering over an RBF affinity of relaxed WMD, and affinity
propagation over the reciprocal WMD similarity. Both are deterministic:
k-means is seeded by farthest points and preference ties are broken by
sentence order.
"""

# Utilities
import logging
from typing import List, Optional, Sequence

import numpy as np
from scipy.linalg import eigh
from scipy.spatial.distance import cdist
from sklearn.cluster import KMeans

# Models
from sentrank.ranking.models import APState, ClusterAssignment, SentenceBag

# Engine
from .distance import pairwise_distances, rbf_similarity, reciprocal_similarity

# Exceptions
from sentrank.utils.exceptions import ClusteringError

logger = logging.getLogger(__name__)

# Scale of the index ordered offset subtracted from the AP preference.
PREFERENCE_TIE_BREAK = 1e-6


def choose_k(n: int, cap: int = 8) -> int:
    """K = min(floor(0.3 n), C), never below 1."""

    if n < 1:
        raise ClusteringError(f'Can not choose a cluster count for {n} sentences.')
    return max(1, min(int(0.3 * n + 1e-9), cap))


def farthest_point_seeds(points: np.ndarray, k: int) -> List[int]:
    """Picks k seed rows, starting at row 0 and adding the row farthest from the chosen ones."""

    seeds = [0]
    nearest = cdist(points, points[[0]]).ravel()
    while len(seeds) < k:
        candidate = int(np.argmax(nearest))
        seeds.append(candidate)
        nearest = np.minimum(nearest, cdist(points, points[[candidate]]).ravel())
    return seeds


def spectral_labels(affinity: np.ndarray, k: int) -> np.ndarray:
    """Clusters the rows of an affinity matrix into k groups.

    Uses the eigenvectors of the k smallest eigenvalues of the symmetric
    normalized Laplacian, rows normalized, then k-means.
    """

    n = affinity.shape[0]
    if k > n:
        raise ClusteringError(f'Can not split {n} sentences into {k} clusters.')
    if k == 1:
        return np.zeros(n, dtype=int)

    degrees = affinity.sum(axis=1)
    inverse_root = np.where(degrees > 0, 1.0 / np.sqrt(np.where(degrees > 0, degrees, 1.0)), 0.0)
    laplacian = np.eye(n) - inverse_root[:, np.newaxis] * affinity * inverse_root[np.newaxis, :]

    _, vectors = eigh(laplacian, subset_by_index=[0, k - 1])
    norms = np.linalg.norm(vectors, axis=1, keepdims=True)
    embedding = vectors / np.where(norms > 0, norms, 1.0)

    seeds = farthest_point_seeds(embedding, k)
    model = KMeans(n_clusters=k, init=embedding[seeds], n_init=1)
    return model.fit(embedding).labels_


def spectral_cluster(
    bags: Sequence[SentenceBag],
    k: int,
    gamma: float = 1.0,
    indexes: Optional[Sequence[int]] = None,
    distances: Optional[np.ndarray] = None,
) -> ClusterAssignment:
    """Clusters sentences by spectral clustering over exp(-gamma * WMD^2)."""

    n = len(bags)
    indexes = list(indexes) if indexes is not None else list(range(1, n + 1))
    if k < 1 or k > n:
        raise ClusteringError(f'Can not split {n} sentences into {k} clusters.')
    if k == 1:
        return ClusterAssignment.single(indexes)

    if distances is None:
        distances = pairwise_distances(bags)
    affinity = rbf_similarity(distances, gamma)
    np.fill_diagonal(affinity, 1.0)

    return ClusterAssignment.from_labels(indexes, spectral_labels(affinity, k))


def preference_vector(similarities: np.ndarray) -> np.ndarray:
    """Returns the median off-diagonal similarity, lowered a little more for every later sentence.

    Sentence i, from 0, gets median - PREFERENCE_TIE_BREAK * i / n. The
    offset settles ties between identical candidates in favor of the
    earliest one; it stays below PREFERENCE_TIE_BREAK, so no preference
    drifts from the median by more than that.
    """

    n = similarities.shape[0]
    off_diagonal = similarities[~np.eye(n, dtype=bool)]
    median = float(np.median(off_diagonal))
    return median - PREFERENCE_TIE_BREAK * np.arange(n) / n


def affinity_step(state: APState) -> APState:
    """Runs one damped round of responsibility and availability updates.

    r_ij = s_ij - max_{j' != j} (a_ij' + s_ij')
    a_ij = min(0, r_jj) + sum_{i' not in {i, j}} max(0, r_i'j) for i != j
    a_jj = sum_{i' != j} max(0, r_i'j)
    """

    S, A = state.S, state.A
    n = S.shape[0]
    rows = np.arange(n)

    AS = A + S
    first = np.argmax(AS, axis=1)
    top = AS[rows, first]
    AS[rows, first] = -np.inf
    second = AS.max(axis=1)

    R = S - top[:, np.newaxis]
    R[rows, first] = S[rows, first] - second
    state.R = state.damping * state.R + (1.0 - state.damping) * R

    positive = np.maximum(state.R, 0.0)
    np.fill_diagonal(positive, 0.0)
    column = positive.sum(axis=0)

    A = np.minimum(0.0, np.diag(state.R))[np.newaxis, :] + column[np.newaxis, :] - positive
    np.fill_diagonal(A, column)
    state.A = state.damping * state.A + (1.0 - state.damping) * A

    return state


def propagate_affinity(
    similarities: np.ndarray,
    damping: float = 0.5,
    max_iter: int = 200,
    stable_iters: int = 15,
) -> Optional[np.ndarray]:
    """Runs affinity propagation over a similarity matrix.

    Returns, for every row, the row of its exemplar, or None when no
    exemplar emerged.
    """

    n = similarities.shape[0]
    S = np.array(similarities, dtype=np.float64)
    np.fill_diagonal(S, preference_vector(S))

    state = APState.start(S, preference=float(S[0, 0]), damping=damping)
    previous = None
    stable = 0

    for _ in range(max_iter):
        affinity_step(state)
        exemplars = state.exemplars()

        if previous is not None and np.array_equal(exemplars, previous):
            stable += 1
        else:
            stable = 0
        previous = exemplars

        if stable >= stable_iters and len(exemplars):
            break

    exemplars = state.exemplars()
    if not len(exemplars):
        return None

    off_diagonal = np.array(similarities, dtype=np.float64)
    choice = exemplars[np.argmax(off_diagonal[:, exemplars], axis=1)]
    choice[exemplars] = exemplars
    return choice


def affinity_propagation(
    bags: Sequence[SentenceBag],
    damping: float = 0.5,
    max_iter: int = 200,
    stable_iters: int = 15,
    indexes: Optional[Sequence[int]] = None,
    distances: Optional[np.ndarray] = None,
) -> ClusterAssignment:
    """Clusters sentences by affinity propagation over 1 / (1 + WMD)."""

    n = len(bags)
    indexes = list(indexes) if indexes is not None else list(range(1, n + 1))
    if n == 0:
        return ClusterAssignment({})
    if n == 1:
        return ClusterAssignment.single(indexes, exemplar=indexes[0])

    if distances is None:
        distances = pairwise_distances(bags)
    similarities = reciprocal_similarity(distances)

    off_diagonal = similarities[~np.eye(n, dtype=bool)]
    if np.allclose(off_diagonal, off_diagonal[0], rtol=0.0, atol=1e-12):
        return ClusterAssignment.single(indexes, exemplar=indexes[0])

    choice = propagate_affinity(similarities, damping, max_iter, stable_iters)
    if choice is None:
        logger.warning('Affinity propagation found no exemplar, falling back to a single cluster.')
        return ClusterAssignment.single(indexes)

    exemplars = {indexes[row] for row in set(choice.tolist())}
    return ClusterAssignment.from_labels(indexes, choice, exemplars=exemplars)
