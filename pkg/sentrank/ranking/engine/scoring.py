"""Sentence salience.

Node scores are averaged over the units of a sentence, optionally after
Softplus elevation, and combined with the sentence graph score.
"""

# Utilities
from typing import Dict, Optional

import numpy as np

# Models
from sentrank.documents.models import Sentence
from sentrank.ranking.models import SalienceTable, ScoreTable, ScoringMode

# Exceptions
from sentrank.utils.exceptions import ConfigurationError


def softplus(x):
    """ln(1 + e^x), without overflow for large x."""

    result = np.logaddexp(0.0, x)
    return float(result) if np.ndim(result) == 0 else result


def sentence_salience(sent: Sentence, scores: ScoreTable, elevate: bool = True) -> float:
    """Returns the mean, Softplus elevated or not, of the scores of the units of a sentence.

    Units missing from the score table count as a score of 0. A sentence
    without units has salience 0.
    """

    size = sent.essential_count
    if size == 0:
        return 0.0

    values = np.array([scores.get(key, 0.0) for key in sorted(sent.distinct_keys)], dtype=np.float64)
    if elevate:
        values = np.logaddexp(0.0, values)

    return float(values.sum() / size)


def combine_scores(
    sal_sp: Dict[int, float],
    w_sent: Optional[Dict[int, float]],
    mode: ScoringMode,
    sal: Optional[Dict[int, float]] = None,
) -> SalienceTable:
    """F_s = (sal_sp + W'(S)) / 2 for SSR, F_s = sal_sp for the sub models."""

    mode = ScoringMode(mode)
    if mode is ScoringMode.SSR:
        if w_sent is None:
            raise ConfigurationError('SSR scoring needs the sentence graph scores.')
        f_s = {index: (value + w_sent.get(index, 0.0)) / 2.0 for index, value in sal_sp.items()}
    else:
        f_s = dict(sal_sp)

    return SalienceTable(
        sal=dict(sal or {}),
        sal_sp=dict(sal_sp),
        w_sent=dict(w_sent or {}),
        f_s=f_s,
    )
