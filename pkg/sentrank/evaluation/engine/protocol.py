"""Evaluation protocol.

A method selects its top p percent of sentences, which are scored
against the same number of top sentences of every reference judge, or
against abstractive references within a word budget. The ablation
harness reruns the pipeline with features switched off.
"""

# Django REST Framework
from rest_framework.exceptions import ValidationError

# Utilities
import json
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence

# Models
from sentrank.evaluation.models import EvalDocument, RougeResult, VariantReport
from sentrank.ranking.models import Ablation, BudgetUnit, ClusterAssignment, RankedOutput, ScoringMode

# Serializers
from sentrank.evaluation.serializers import EvalDocumentSerializer

# Engine
from sentrank.evaluation.engine.rouge import rouge_n, rouge_su4
from sentrank.ranking.engine.centrality import pagerank_unbiased
from sentrank.ranking.engine.graphs import build_swg
from sentrank.ranking.engine.pipeline import SentenceRanker
from sentrank.ranking.engine.scoring import combine_scores, sentence_salience
from sentrank.ranking.engine.selection import cut_budget, rank_sentences

# Exceptions
from sentrank.utils.exceptions import DataError, DegenerateGraphError, ParameterError, format_errors

logger = logging.getLogger(__name__)

COMBINED = 'combined'
ALL_JUDGES = 'all'
ABSTRACTS = 'abstracts'
LEAD = 'lead'
HUMAN = 'human'
TEXTRANK = 'textrank'


def combined_ranking(judge_scores: Sequence[Sequence[float]]) -> List[float]:
    """Returns the per sentence mean of the judges' scores."""

    if not judge_scores:
        raise DataError('A combined ranking needs at least one judge.')

    lengths = {len(scores) for scores in judge_scores}
    if len(lengths) != 1:
        raise DataError(f'Judges score different numbers of sentences: {sorted(lengths)}.')

    return [sum(column) / len(judge_scores) for column in zip(*judge_scores)]


def selection_size(n: int, pct: float) -> int:
    """Returns ceil(pct / 100 * n)."""

    if not 0.0 < pct <= 100.0:
        raise ParameterError(f'The selection percentage must lie in (0, 100], got {pct}.')

    size = math.ceil(round(pct * n / 100.0, 9))
    if size == 0:
        raise ParameterError(f'Selecting {pct}% of {n} sentences selects nothing.')
    return size


def top_by_scores(scores: Sequence[float], k: int) -> List[int]:
    """Returns the 1-based indexes of the k best scored sentences, ties to the lower index."""

    ranked = sorted(range(1, len(scores) + 1), key=lambda index: (-scores[index - 1], index))
    return sorted(ranked[:k])


def score_text(candidate: str, references: Sequence[str]) -> RougeResult:
    return RougeResult(
        r1=rouge_n(candidate, references, 1),
        r2=rouge_n(candidate, references, 2),
        rsu4=rouge_su4(candidate, references),
    )


def reference_judges(doc: EvalDocument, references: str) -> List[Sequence[float]]:
    """Returns the judge score vectors a reference option names.

    combined is the mean of every judge, all every judge on its own and
    judgeN the N-th judge.
    """

    if not doc.judge_scores:
        raise DataError(f'Document {doc.id!r} has no judge scores for the {references!r} references.')

    if references == COMBINED:
        return [combined_ranking(doc.judge_scores)]
    if references == ALL_JUDGES:
        return list(doc.judge_scores)
    if references.startswith('judge') and references[len('judge'):].isdigit():
        return [doc.judge(int(references[len('judge'):]))]

    raise ParameterError(f'Unknown reference option {references!r}.')


def evaluate_selection(
    doc: EvalDocument,
    method_ranking: RankedOutput,
    pct: float,
    judges: Sequence[Sequence[float]],
) -> RougeResult:
    """Scores the method's top pct percent against the same number of top sentences of each judge."""

    k = selection_size(doc.n, pct)
    candidate = doc.text(method_ranking.order[:k])
    references = [doc.text(top_by_scores(scores, k)) for scores in judges]
    return score_text(candidate, references)


def evaluate_judge(doc: EvalDocument, judge: int, pct: float) -> RougeResult:
    """Scores one judge's own top pct percent against the other judges."""

    if doc.judges < 2:
        raise DataError(f'Document {doc.id!r} needs two judges to score one against the others.')

    k = selection_size(doc.n, pct)
    candidate = doc.text(top_by_scores(doc.judge(judge), k))
    others = [scores for number, scores in enumerate(doc.judge_scores, start=1) if number != judge]
    return score_text(candidate, [doc.text(top_by_scores(scores, k)) for scores in others])


def evaluate_budget(doc: EvalDocument, ranking: RankedOutput, budget_words: int) -> RougeResult:
    """Scores the word budget prefix of a ranking against the abstractive references."""

    if not doc.references:
        raise DataError(f'Document {doc.id!r} has no abstractive references.')

    cut = cut_budget(ranking, doc.as_document(), budget_words, BudgetUnit.WORDS)
    return score_text(doc.text(cut.indexes), list(doc.references))


def lead_ranking(n: int) -> RankedOutput:
    """Returns the document order as a ranking."""

    return RankedOutput(
        order=tuple(range(1, n + 1)),
        unit_scores={index: 0.0 for index in range(1, n + 1)},
        round={index: index for index in range(1, n + 1)},
        cluster={index: 0 for index in range(1, n + 1)},
    )


def textrank_ranking(ranker: SentenceRanker, doc: EvalDocument) -> RankedOutput:
    """Ranks sentences by the plain mean of the unbiased PageRank of their words.

    The word graph follows the ranker's graph settings, with every
    feature on. Scores keep no article structure bias or Softplus
    elevation, and every sentence sits in one cluster. A document too
    small for a word graph keeps its order.
    """

    cfg = ranker.config.with_ablations(())
    document = ranker.analyzer.words_only(ranker.analyze_sentences(doc.sentences, doc.id))

    try:
        graph = build_swg(document, ranker.embeddings, cfg.graph)
    except DegenerateGraphError as error:
        logger.warning('Document %s: %s', doc.id, error)
        return lead_ranking(doc.n)

    scores = pagerank_unbiased(graph, cfg.d, cfg.tol, cfg.max_iter)
    sal = {sentence.index: sentence_salience(sentence, scores, elevate=False) for sentence in document.sentences}
    clusters = ClusterAssignment.single([sentence.index for sentence in document.sentences])

    return rank_sentences(combine_scores(sal, None, ScoringMode.SWR, sal=sal), clusters, document)


def parse_ablations(flags: Iterable) -> List[Ablation]:
    """Returns the ablations named by flags, in a stable order."""

    parsed = set()
    for flag in flags:
        if isinstance(flag, Ablation):
            parsed.add(flag)
            continue
        try:
            parsed.add(Ablation(str(flag).strip().lower()))
        except ValueError:
            raise ParameterError(f'Unknown ablation flag {flag!r}. Expected one of: nse, nas, nsc, nsp.')

    return [flag for flag in Ablation if flag in parsed]


@dataclass(frozen=True)
class EvaluationProtocol:
    """How a ranking of a corpus document is scored."""

    pct: float = 10.0
    references: str = COMBINED
    budget_words: int = 100

    def evaluate(self, doc: EvalDocument, ranking: RankedOutput) -> RougeResult:
        if self.references == ABSTRACTS:
            return evaluate_budget(doc, ranking, self.budget_words)
        return evaluate_selection(doc, ranking, self.pct, reference_judges(doc, self.references))

    def evaluate_human(self, doc: EvalDocument) -> RougeResult:
        """Mean leave-one-out score of the judges themselves."""

        return RougeResult.mean([evaluate_judge(doc, judge, self.pct) for judge in range(1, doc.judges + 1)])


def variant_name(method: str, ablations: Sequence[Ablation]) -> str:
    return '_'.join([method] + [flag.value for flag in ablations])


def run_ablation(
    corpus: Sequence[EvalDocument],
    ranker: SentenceRanker,
    flags: Iterable,
    protocol: EvaluationProtocol = EvaluationProtocol(),
    workers: Optional[int] = None,
    baselines: bool = False,
) -> Dict[str, VariantReport]:
    """Evaluates the ranker and its ablated variants over a corpus.

    The baseline runs the ranker as configured; every flag adds a variant
    with that feature off and, with several flags, one more variant with
    all of them off. baselines adds the lead and textrank rankings and,
    for judge references with two judges or more, the human leave-one-out
    scores.
    """

    if not corpus:
        raise DataError('The evaluation corpus is empty.')

    ablations = parse_ablations(flags)
    base = ranker.config.with_ablations(())
    method = base.method.value

    variants = [(method, base)]
    variants += [(variant_name(method, [flag]), base.with_ablations([flag])) for flag in ablations]
    if len(ablations) > 1:
        variants.append((variant_name(method, ablations), base.with_ablations(ablations)))

    def evaluate(doc: EvalDocument) -> Dict[str, RougeResult]:
        results = {}
        for name, config in variants:
            result = ranker.with_config(config).rank_sentences(doc.sentences, doc.id)
            results[name] = protocol.evaluate(doc, result.ranked)

        if baselines:
            results[LEAD] = protocol.evaluate(doc, lead_ranking(doc.n))
            results[TEXTRANK] = protocol.evaluate(doc, textrank_ranking(ranker, doc))
            if protocol.references != ABSTRACTS and doc.judges >= 2:
                results[HUMAN] = protocol.evaluate_human(doc)
        return results

    if workers is not None and workers < 1:
        raise ParameterError(f'The worker count must be positive, got {workers}.')

    with ThreadPoolExecutor(max_workers=workers or os.cpu_count() or 1) as executor:
        per_document = list(executor.map(evaluate, corpus))

    reports = {}
    for doc, results in zip(corpus, per_document):
        for name, result in results.items():
            reports.setdefault(name, VariantReport(name)).documents.append((doc.id, result))

    for name, report in reports.items():
        mean = report.mean
        logger.info('%s: R-1 %.4f R-2 %.4f R-SU4 %.4f', name, mean.r1, mean.r2, mean.rsu4)

    return reports


def read_corpus(path: str) -> List[EvalDocument]:
    """Reads a JSON Lines corpus, one document per line.

    Raises DataError naming the line of the first schema violation.
    """

    corpus = []
    with open(path, encoding='utf-8') as corpus_file:
        for line_number, line in enumerate(corpus_file, start=1):
            if not line.strip():
                continue

            try:
                data = json.loads(line)
            except json.JSONDecodeError as error:
                raise DataError(f'invalid JSON: {error.msg}', line_number)

            serializer = EvalDocumentSerializer(data=data)
            try:
                serializer.is_valid(raise_exception=True)
                corpus.append(serializer.save())
            except ValidationError as error:
                raise DataError(format_errors(error.detail), line_number)
            except DataError as error:
                raise DataError(str(error), line_number)

    if not corpus:
        raise DataError(f'The corpus {path!r} holds no document.')

    return corpus
