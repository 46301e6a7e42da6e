"""Round-robin sentence selection.

Approximates the multi-objective knapsack over salience and subtopic
coverage: sentences are ranked by score per character, one cluster at a
time, strongest cluster first in every round.
"""

# Utilities
from typing import Dict, List

# Models
from sentrank.documents.models import Document
from sentrank.ranking.models import (
    BudgetCut,
    BudgetUnit,
    ClusterAssignment,
    RankedOutput,
    SalienceTable,
)

# Exceptions
from sentrank.utils.exceptions import ParameterError


def unit_scores(salience: SalienceTable, doc: Document) -> Dict[int, float]:
    """s'_i = F_s(S_i) / l_i."""

    return {
        sentence.index: salience.f_s.get(sentence.index, 0.0) / max(sentence.char_length, 1)
        for sentence in doc.sentences
    }


def rank_sentences(salience: SalienceTable, clusters: ClusterAssignment, doc: Document) -> RankedOutput:
    """Ranks every sentence of a document.

    Each cluster is sorted by unit score. Every round sorts the clusters
    left by their best remaining unit score and takes the top sentence of
    each, in that order. Sentences without units come last, in document
    order. Ties go to the lower sentence index.
    """

    scores = unit_scores(salience, doc)
    empty = [sentence.index for sentence in doc.sentences if sentence.essential_count == 0]
    ranked_ones = [sentence.index for sentence in doc.sentences if sentence.essential_count > 0]

    queues: Dict[int, List[int]] = {}
    for index in ranked_ones:
        queues.setdefault(clusters.labels.get(index, 0), []).append(index)
    for queue in queues.values():
        queue.sort(key=lambda index: (-scores[index], index))

    order = []
    rounds = {}
    current = 0
    while queues:
        current += 1
        strongest = sorted(queues, key=lambda label: (-scores[queues[label][0]], queues[label][0]))
        for label in strongest:
            index = queues[label].pop(0)
            order.append(index)
            rounds[index] = current
            if not queues[label]:
                del queues[label]

    if empty:
        current += 1
        for index in empty:
            order.append(index)
            rounds[index] = current

    return RankedOutput(
        order=tuple(order),
        unit_scores=scores,
        round=rounds,
        cluster={sentence.index: clusters.labels.get(sentence.index, 0) for sentence in doc.sentences},
    )


def sentence_length(doc: Document, index: int, unit: BudgetUnit) -> int:
    sentence = doc.sentence(index)
    if unit is BudgetUnit.WORDS:
        return sentence.word_count
    if unit is BudgetUnit.CHARS:
        return sentence.char_length
    return 1


def cut_budget(ranked: RankedOutput, doc: Document, budget: int, unit: BudgetUnit = BudgetUnit.WORDS) -> BudgetCut:
    """Keeps the longest prefix of the ranking that fits the budget, in document order.

    When the top sentence alone is over budget it is kept anyway and the
    cut is flagged.
    """

    unit = BudgetUnit(unit)
    if budget <= 0:
        raise ParameterError(f'The budget must be positive, got {budget}.')

    kept = []
    used = 0
    for index in ranked.order:
        length = sentence_length(doc, index, unit)
        if used + length > budget:
            break
        kept.append(index)
        used += length

    if not kept and ranked.order:
        return BudgetCut(indexes=(ranked.order[0],), over_budget=True)

    return BudgetCut(indexes=tuple(sorted(kept)))


def reading_layers(ranked: RankedOutput, size: int) -> List[List[int]]:
    """Splits a ranking into consecutive layers of size sentences, each in document order."""

    if size <= 0:
        raise ParameterError(f'The layer size must be positive, got {size}.')

    return [sorted(ranked.order[start:start + size]) for start in range(0, ranked.n, size)]
