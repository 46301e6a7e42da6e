"""ROUGE recall metrics.

Texts are lowercased and split on non alphanumerics, without stemming.
Every metric is the clipped overlap count over the reference count,
averaged over the references.
"""

# Utilities
import logging
import re
from collections import Counter
from typing import List, Sequence

logger = logging.getLogger(__name__)

TOKEN = re.compile(r'[^\W_]+')

MAX_SKIP = 4


def rouge_tokens(text: str) -> List[str]:
    return TOKEN.findall(text.lower())


def ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def skip_units(tokens: Sequence[str], max_skip: int = MAX_SKIP) -> Counter:
    """Counts unigrams and skip-bigrams with at most max_skip words in between."""

    units = Counter((token,) for token in tokens)
    for i, first in enumerate(tokens):
        for second in tokens[i + 1:i + max_skip + 2]:
            units[(first, second)] += 1
    return units


def _recall(candidate: Counter, reference: Counter) -> float:
    total = sum(reference.values())
    overlap = sum(min(count, candidate[unit]) for unit, count in reference.items())
    return overlap / total


def _mean_recall(candidate_units: Counter, references: Sequence[str], count, label: str) -> float:
    if not references:
        raise ValueError('ROUGE needs at least one reference.')

    recalls = []
    for reference in references:
        reference_units = count(rouge_tokens(reference))
        if not reference_units:
            logger.warning('Reference too short for %s, scored 0: %r', label, reference[:60])
            recalls.append(0.0)
            continue
        recalls.append(_recall(candidate_units, reference_units))

    return sum(recalls) / len(recalls)


def rouge_n(candidate: str, references: Sequence[str], n: int) -> float:
    """Returns the ROUGE-n recall of a candidate, n being 1 or 2."""

    if n not in (1, 2):
        raise ValueError(f'ROUGE-n is computed for n in (1, 2), got {n}.')

    return _mean_recall(
        ngrams(rouge_tokens(candidate), n),
        references,
        lambda tokens: ngrams(tokens, n),
        f'ROUGE-{n}',
    )


def rouge_su4(candidate: str, references: Sequence[str]) -> float:
    """Returns the ROUGE-SU4 recall of a candidate."""

    return _mean_recall(skip_units(rouge_tokens(candidate)), references, skip_units, 'ROUGE-SU4')
