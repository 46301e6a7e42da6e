"""Sentence ranking pipeline.

Wires graphs, centrality, salience, clustering and selection for the
three ranking methods: SWR over the word graph, SPR over the
phrase-word graph and SSR adding the sentence graph.
"""

# Utilities
import logging
from typing import Iterable, Optional

# Models
from sentrank.documents.models import Document
from sentrank.documents.models.embeddings import EmbeddingTable
from sentrank.ranking.models import (
    Ablation,
    ClusterAssignment,
    Clusterer,
    GraphKind,
    LocationScorer,
    Method,
    PipelineConfig,
    RankingResult,
    ScoreTable,
    SentenceBag,
)

# Preprocessing
from sentrank.documents.preprocessing import PhraseLexicon, TextAnalyzer

# Engine
from .centrality import pagerank_biased, sentence_bias, word_bias
from .clustering import affinity_propagation, choose_k, spectral_cluster
from .distance import pairwise_distances
from .graphs import build_spg, build_ssg, build_swg
from .scoring import combine_scores, sentence_salience
from .selection import rank_sentences

# Exceptions
from sentrank.utils.exceptions import DegenerateGraphError

logger = logging.getLogger(__name__)


class SentenceRanker:
    """Ranks the sentences of documents with one configuration.

    The ranker is read only once built, so one instance can serve many
    documents from several threads.
    """

    def __init__(
        self,
        embeddings: EmbeddingTable,
        config: Optional[PipelineConfig] = None,
        lexicon: Optional[PhraseLexicon] = None,
        analyzer: Optional[TextAnalyzer] = None,
    ) -> None:
        self.embeddings = embeddings
        self.config = config or PipelineConfig()
        self.lexicon = lexicon or PhraseLexicon()
        self.analyzer = analyzer or TextAnalyzer.from_settings()

    def with_config(self, config: PipelineConfig) -> 'SentenceRanker':
        """Returns a ranker sharing the resources of this one."""

        return SentenceRanker(self.embeddings, config, self.lexicon, self.analyzer)

    def analyze(self, text: str, doc_id: str = None) -> Document:
        return self.analyzer.analyze(text, self.lexicon, self.embeddings, doc_id)

    def analyze_sentences(self, sentences: Iterable[str], doc_id: str = None) -> Document:
        return self.analyzer.analyze_sentences(sentences, self.lexicon, self.embeddings, doc_id)

    def rank_text(self, text: str, doc_id: str = None) -> RankingResult:
        return self.rank(self.analyze(text, doc_id))

    def rank_sentences(self, sentences: Iterable[str], doc_id: str = None) -> RankingResult:
        return self.rank(self.analyze_sentences(sentences, doc_id))

    def _node_scores(self, units: Document, ls: LocationScorer, graphs: dict, tables: dict) -> ScoreTable:
        """Scores the units of the word or phrase-word graph.

        Scores are multiplied by the node count, so they average 1.
        """

        cfg = self.config
        build = build_swg if cfg.method is Method.SWR else build_spg

        try:
            graph = build(units, self.embeddings, cfg.graph)
        except DegenerateGraphError as error:
            logger.warning('Document %s: %s', units.id or '-', error)
            return ScoreTable({})

        scores = pagerank_biased(graph, word_bias(units, ls), cfg.d, cfg.tol, cfg.max_iter)
        graphs[graph.kind.value] = graph
        tables[graph.kind.value] = scores
        return scores.scaled(len(graph))

    def _sentence_scores(
        self, units: Document, bags, distances, ls: LocationScorer, graphs: dict, tables: dict
    ) -> dict:
        cfg = self.config
        if units.n == 1:
            return {1: 1.0}

        graph = build_ssg(units, bags, cfg.graph, distances)
        scores = pagerank_biased(graph, sentence_bias(units, ls), cfg.d, cfg.tol, cfg.max_iter)
        graphs[GraphKind.SSG.value] = graph
        tables[GraphKind.SSG.value] = scores
        return dict(scores.scores)

    def _clusters(self, units: Document, bags, distances) -> ClusterAssignment:
        cfg = self.config
        indexes = [sentence.index for sentence in units.sentences]

        if Ablation.NSC in cfg.ablations or units.n < 2:
            return ClusterAssignment.single(indexes)

        if cfg.effective_clusterer is Clusterer.AFFINITY_PROPAGATION:
            return affinity_propagation(
                bags,
                damping=cfg.ap_damping,
                max_iter=cfg.ap_max_iter,
                stable_iters=cfg.ap_stable_iters,
                indexes=indexes,
                distances=distances,
            )

        k = choose_k(units.n, cfg.cluster_cap)
        return spectral_cluster(bags, k, cfg.gamma, indexes=indexes, distances=distances)

    def rank(self, document: Document) -> RankingResult:
        """Ranks every sentence of an analyzed document."""

        cfg = self.config
        units = self.analyzer.words_only(document) if cfg.method is Method.SWR else document
        ls = LocationScorer(cfg.biased_structure, max(document.n, 1))
        graphs, tables = {}, {}

        if document.n == 0:
            salience = combine_scores({}, {}, cfg.mode)
            clusters = ClusterAssignment({})
            ranked = rank_sentences(salience, clusters, document)
            return RankingResult(document, cfg.method.value, salience, clusters, ranked)

        node_scores = self._node_scores(units, ls, graphs, tables)
        sal = {sentence.index: sentence_salience(sentence, node_scores, elevate=False) for sentence in units.sentences}
        sal_sp = {
            sentence.index: sentence_salience(sentence, node_scores, elevate=cfg.elevate)
            for sentence in units.sentences
        }

        key_vectors = self.embeddings.key_vectors(units.units())
        bags = [
            SentenceBag.from_units(sentence.units, self.embeddings, cfg.wmd_cap, key_vectors)
            for sentence in units.sentences
        ]
        distances = pairwise_distances(bags)

        w_sent = None
        if cfg.method is Method.SSR:
            w_sent = self._sentence_scores(units, bags, distances, ls, graphs, tables)

        salience = combine_scores(sal_sp, w_sent, cfg.mode, sal=sal)
        clusters = self._clusters(units, bags, distances)
        ranked = rank_sentences(salience, clusters, units)

        logger.info(
            'Ranked %d sentences of %s with %s in %d clusters.',
            document.n, document.id or '-', cfg.method.value, clusters.k,
        )
        return RankingResult(document, cfg.method.value, salience, clusters, ranked, graphs, tables)
