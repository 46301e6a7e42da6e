"""Ranking output models."""

# Utilities
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Tuple

# Models
from sentrank.documents.models import Document
from .clusters import ClusterAssignment
from .graphs import SemanticGraph
from .scores import SalienceTable, ScoreTable


@dataclass(frozen=True)
class RankedOutput:
    """Total ranking of the sentences of a document.

    order lists sentence indexes from rank 1. unit_scores holds
    s'_i = F_s(S_i) / l_i, round the round-robin pass that selected each
    sentence and cluster its subtopic cluster.
    """

    order: Tuple[int, ...]
    unit_scores: Dict[int, float]
    round: Dict[int, int]
    cluster: Dict[int, int]

    def __post_init__(self) -> None:
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise ValueError('A ranking must be a permutation of 1..n.')

    @property
    def n(self) -> int:
        return len(self.order)

    def rank_of(self, index: int) -> int:
        return self.order.index(index) + 1


class BudgetUnit(str, Enum):
    """Units a summary budget can be measured in."""

    WORDS = 'words'
    CHARS = 'chars'
    SENTENCES = 'sentences'


@dataclass(frozen=True)
class BudgetCut:
    """Sentences kept by a budget, in document order."""

    indexes: Tuple[int, ...]
    over_budget: bool = False


@dataclass
class RankingResult:
    """Everything a ranking run produced for one document.

    graphs and scores are keyed by graph kind; a graph that could not be
    built is missing.
    """

    document: Document
    method: str
    salience: SalienceTable
    clusters: ClusterAssignment
    ranked: RankedOutput
    graphs: Dict[str, SemanticGraph] = field(default_factory=dict)
    scores: Dict[str, ScoreTable] = field(default_factory=dict)
