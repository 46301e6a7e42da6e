"""Graph construction.

The semantic word graph (SWG) and the semantic phrase-word graph (SPG)
share one builder over unit streams; the semantic sentence graph (SSG)
connects sentences. Every graph keeps a co-occurrence and a semantic
channel, each normalized to sum 1 over the whole graph.
"""

# Utilities
import logging
import math
from collections import Counter
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

# Models
from sentrank.documents.models import Document
from sentrank.documents.models.embeddings import EmbeddingTable
from sentrank.ranking.models import (
    Edge,
    GraphConfig,
    GraphKind,
    SemanticGraph,
    SentenceBag,
)

# Engine
from .distance import pairwise_distances, reciprocal_similarity

# Exceptions
from sentrank.utils.exceptions import DegenerateGraphError

logger = logging.getLogger(__name__)

# Floor of log10|S_i| + log10|S_j|, only reached when both sentences have at most one unit.
MIN_LOG_LENGTH = 0.1


def _normalize(weights: Dict[Tuple, float]) -> Dict[Tuple, float]:
    total = sum(weights.values())
    if total <= 0:
        return {}
    return {pair: weight / total for pair, weight in weights.items()}


def _merge(nodes, kind: GraphKind, co_occurrence: Dict, semantic: Dict) -> SemanticGraph:
    w_c = _normalize(co_occurrence)
    w_s = _normalize(semantic)

    edges = {}
    for pair in list(w_c) + [pair for pair in w_s if pair not in w_c]:
        edges[pair] = Edge(w_c=w_c.get(pair, 0.0), w_s=w_s.get(pair, 0.0))

    return SemanticGraph(kind, nodes, edges)


def co_occurrences(doc: Document, window: int) -> Counter:
    """Counts unit pairs that appear less than window positions apart.

    Windows slide over the unit stream of each sentence and never cross
    a sentence boundary. Pairs are keyed by their first appearance order.
    """

    order = {key: position for position, key in enumerate(doc.units_by_key())}
    counts = Counter()

    for sentence in doc.sentences:
        keys = sentence.keys
        for start, first in enumerate(keys):
            for second in keys[start + 1:start + window]:
                if first == second:
                    continue
                pair = (first, second) if order[first] < order[second] else (second, first)
                counts[pair] += 1

    return counts


def semantic_similarities(doc: Document, table: EmbeddingTable, delta: float) -> Dict[Tuple, float]:
    """Returns the cosine similarity of every unit pair above delta.

    Units without an embedding, or with a zero vector, get no semantic
    edge.
    """

    key_vectors = table.key_vectors(doc.units())
    keys = [key for key in doc.units_by_key() if key in key_vectors]
    if len(keys) < 2:
        return {}

    vectors = np.vstack([key_vectors[key] for key in keys]).astype(np.float64)
    norms = np.linalg.norm(vectors, axis=1)
    usable = norms > 0
    keys = [key for key, keep in zip(keys, usable) if keep]
    vectors = vectors[usable] / norms[usable][:, np.newaxis]

    cosines = np.clip(vectors @ vectors.T, -1.0, 1.0)
    rows, columns = np.nonzero(np.triu(cosines > delta, k=1))

    return {(keys[i], keys[j]): float(cosines[i, j]) for i, j in zip(rows, columns)}


def build_unit_graph(
    doc: Document,
    table: EmbeddingTable,
    kind: GraphKind,
    window: int,
    delta: float,
    ablate_semantic_edges: bool = False,
) -> SemanticGraph:
    """Builds a graph whose nodes are the distinct units of a document."""

    nodes = list(doc.units_by_key())
    if len(nodes) < 2:
        raise DegenerateGraphError(f'{kind.value} needs at least 2 distinct units, found {len(nodes)}.')

    co_occurrence = co_occurrences(doc, window)
    semantic = {} if ablate_semantic_edges else semantic_similarities(doc, table, delta)

    return _merge(nodes, kind, dict(co_occurrence), semantic)


def build_swg(doc: Document, table: EmbeddingTable, cfg: GraphConfig) -> SemanticGraph:
    """Builds the semantic word graph over a words-only document."""

    return build_unit_graph(
        doc, table, GraphKind.SWG, cfg.window_swg, cfg.delta_swg, cfg.ablate_semantic_edges
    )


def build_spg(doc: Document, table: EmbeddingTable, cfg: GraphConfig) -> SemanticGraph:
    """Builds the semantic phrase-word graph over phrases and words."""

    return build_unit_graph(
        doc, table, GraphKind.SPG, cfg.window_spg, cfg.delta_spg, cfg.ablate_semantic_edges
    )


def shared_units(doc: Document, i: int, j: int) -> Tuple[int, int]:
    """Returns p_ij and v_ij, the distinct phrases and words two sentences share."""

    first = {unit.key: unit for unit in doc.sentence(i).units}
    second = {unit.key for unit in doc.sentence(j).units}
    shared = [first[key] for key in first if key in second]

    phrases = sum(1 for unit in shared if unit.is_phrase)
    return phrases, len(shared) - phrases


def semantic_edge_count(n: int, gamma_pct: float) -> int:
    """Returns the number of SSG semantic edges, the top gamma_pct percent of all pairs."""

    pairs = n * (n - 1) // 2
    return min(pairs, math.ceil(round(gamma_pct * pairs / 100.0, 9)))


def build_ssg(
    doc: Document,
    bags: Sequence[SentenceBag],
    cfg: GraphConfig,
    distances: Optional[np.ndarray] = None,
) -> SemanticGraph:
    """Builds the semantic sentence graph.

    Sentences sharing units get a co-occurrence edge weighted by the
    shared count over the sum of their log lengths. The top gamma_pct
    percent of sentence pairs by reciprocal WMD similarity get a semantic
    edge, ties going to the lower pair.
    """

    n = doc.n
    if n < 2:
        raise DegenerateGraphError(f'SSG needs at least 2 sentences, found {n}.')

    nodes = [sentence.index for sentence in doc.sentences]

    co_occurrence = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            phrases, words = shared_units(doc, i, j)
            if phrases + words == 0:
                continue

            lengths = math.log10(doc.sentence(i).essential_count) + math.log10(doc.sentence(j).essential_count)
            co_occurrence[(i, j)] = (phrases + words) / max(lengths, MIN_LOG_LENGTH)

    semantic = {}
    if not cfg.ablate_semantic_edges:
        if distances is None:
            distances = pairwise_distances(bags)
        similarities = reciprocal_similarity(distances)

        candidates = sorted(
            ((float(similarities[i - 1, j - 1]), i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)),
            key=lambda candidate: (-candidate[0], candidate[1], candidate[2]),
        )
        for similarity, i, j in candidates[:semantic_edge_count(n, cfg.gamma_pct)]:
            if similarity > 0:
                semantic[(i, j)] = similarity

    return _merge(nodes, GraphKind.SSG, co_occurrence, semantic)
