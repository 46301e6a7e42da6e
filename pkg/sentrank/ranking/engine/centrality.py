"""PageRank over semantic graphs.

The unbiased variant jumps uniformly and its scores sum to n, the
article-structure biased variants jump following a bias vector and their
scores sum to 1. Updates are Jacobi style: every node is updated from
the previous iteration only.
"""

# Utilities
import logging

import numpy as np

# Models
from sentrank.documents.models import Document
from sentrank.ranking.models import (
    BiasVector,
    LocationScorer,
    ScoreTable,
    SemanticGraph,
)

# Exceptions
from sentrank.utils.exceptions import ParameterError

logger = logging.getLogger(__name__)


def transition_matrix(g: SemanticGraph) -> np.ndarray:
    """Returns the row-stochastic transition matrix of a graph.

    A node without edges moves to every other node with probability
    1/(n - 1).
    """

    matrix = g.adjacency()
    n = len(g)
    totals = matrix.sum(axis=1)

    for row, total in enumerate(totals):
        if total > 0:
            matrix[row] /= total
        elif n > 1:
            matrix[row] = 1.0 / (n - 1)
            matrix[row, row] = 0.0

    return matrix


def _iterate(g: SemanticGraph, teleport: np.ndarray, start: float, d: float, tol: float, max_iter: int) -> ScoreTable:
    if not 0.0 < d < 1.0:
        raise ParameterError(f'The damping factor must lie in (0, 1), got {d}.')

    n = len(g)
    if n == 0:
        return ScoreTable({})
    if n == 1:
        return ScoreTable({g.nodes[0]: float(teleport[0] / (1.0 - d))})

    spread = d * transition_matrix(g).T
    scores = np.full(n, start)
    converged = False

    iteration = 0
    for iteration in range(1, max_iter + 1):
        updated = spread @ scores + teleport
        change = np.max(np.abs(updated - scores))
        scores = updated
        if change < tol:
            converged = True
            break

    if not converged:
        logger.warning('PageRank over %s did not converge in %d iterations.', g.kind.value, max_iter)

    return ScoreTable(
        {node: float(score) for node, score in zip(g.nodes, scores)},
        iterations_used=iteration,
        converged=converged,
    )


def pagerank_unbiased(g: SemanticGraph, d: float = 0.85, tol: float = 1e-8, max_iter: int = 100) -> ScoreTable:
    """W(v_i) = d * sum_j (w_ji / sum_k w_jk) W(v_j) + (1 - d), starting from 1."""

    return _iterate(g, np.full(len(g), 1.0 - d), 1.0, d, tol, max_iter)


def pagerank_biased(
    g: SemanticGraph,
    bias: BiasVector,
    d: float = 0.85,
    tol: float = 1e-8,
    max_iter: int = 100,
) -> ScoreTable:
    """W'(v_i) = d * sum_j (w_ji / sum_k w_jk) W'(v_j) + (1 - d) P(v_i), starting from 1/n."""

    missing = [node for node in g.nodes if node not in bias.probs]
    if missing:
        raise ParameterError(f'The bias vector does not cover {len(missing)} nodes, e.g. {missing[0]!r}.')

    teleport = (1.0 - d) * np.array([bias[node] for node in g.nodes], dtype=np.float64)
    start = 1.0 / len(g) if len(g) else 0.0
    return _iterate(g, teleport, start, d, tol, max_iter)


def word_bias(doc: Document, ls: LocationScorer) -> BiasVector:
    """P(v) proportional to the sum of word location scores of the sentences holding v.

    A sentence counts once however many times it repeats the unit.
    """

    totals = {}
    for sentence in doc.sentences:
        score = ls.word_score(sentence.index)
        for key in sentence.distinct_keys:
            totals[key] = totals.get(key, 0.0) + score

    if not totals:
        return BiasVector({})

    ordered = {key: totals[key] for key in doc.units_by_key()}
    return BiasVector.normalized(ordered)


def sentence_bias(doc: Document, ls: LocationScorer) -> BiasVector:
    """P(S_i) = LS(S_i) / sum_j LS(S_j)."""

    if doc.n == 0:
        return BiasVector({})
    return BiasVector.normalized({sentence.index: ls.sentence_score(sentence.index) for sentence in doc.sentences})
