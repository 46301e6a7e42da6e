"""Location scorer, bias vector, score and salience table models."""

# Utilities
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Hashable, List, Optional


class Structure(str, Enum):
    """Article structures a location scorer can follow."""

    INVERTED_PYRAMID = 'inverted_pyramid'
    HOURGLASS = 'hourglass'
    UNIFORM = 'uniform'


@dataclass(frozen=True)
class LocationScorer:
    """Location scores of words and sentences for an article structure.

    Inverted pyramid: a word of sentence i scores 1/i and sentence i
    scores 1/log10(1 + i). Hourglass measures the position from the
    closest end of the document, so head and tail are both elevated.
    Uniform gives every position the same score.
    """

    structure: Structure = Structure.INVERTED_PYRAMID
    n: int = 1

    def _position(self, index: int) -> int:
        if not 1 <= index <= self.n:
            raise ValueError(f'Sentence index {index} outside 1..{self.n}.')

        if self.structure is Structure.HOURGLASS:
            return min(index, self.n + 1 - index)
        return index

    def word_score(self, index: int) -> float:
        position = self._position(index)
        if self.structure is Structure.UNIFORM:
            return 1.0
        return 1.0 / position

    def sentence_score(self, index: int) -> float:
        position = self._position(index)
        if self.structure is Structure.UNIFORM:
            return 1.0
        return 1.0 / math.log10(1 + position)


@dataclass(frozen=True)
class BiasVector:
    """Jump probabilities P(v) of the biased PageRank, summing to 1."""

    probs: Dict[Hashable, float]

    def __post_init__(self) -> None:
        if any(value < 0 for value in self.probs.values()):
            raise ValueError('Bias probabilities can not be negative.')
        if self.probs and abs(sum(self.probs.values()) - 1.0) > 1e-9:
            raise ValueError('Bias probabilities must sum to 1.')

    def __getitem__(self, node: Hashable) -> float:
        return self.probs[node]

    @classmethod
    def normalized(cls, weights: Dict[Hashable, float]) -> 'BiasVector':
        total = sum(weights.values())
        if total <= 0:
            raise ValueError('Bias weights must have a positive total.')
        return cls({node: value / total for node, value in weights.items()})

    @classmethod
    def uniform(cls, nodes) -> 'BiasVector':
        nodes = list(nodes)
        return cls({node: 1.0 / len(nodes) for node in nodes})


@dataclass(frozen=True)
class ScoreTable:
    """PageRank scores of the nodes of a graph."""

    scores: Dict[Hashable, float]
    iterations_used: int = 0
    converged: bool = True

    def __getitem__(self, node: Hashable) -> float:
        return self.scores[node]

    def __contains__(self, node: Hashable) -> bool:
        return node in self.scores

    def get(self, node: Hashable, default: Optional[float] = None) -> Optional[float]:
        return self.scores.get(node, default)

    def total(self) -> float:
        return sum(self.scores.values())

    def scaled(self, factor: float) -> 'ScoreTable':
        """Returns the table with every score multiplied by factor."""

        return ScoreTable(
            {node: score * factor for node, score in self.scores.items()},
            iterations_used=self.iterations_used,
            converged=self.converged,
        )

    def dump(self) -> List[str]:
        """Returns ``node<TAB>score`` lines sorted by node."""

        return sorted(f'{node}\t{score!r}' for node, score in self.scores.items())


class ScoringMode(str, Enum):
    """Which graphs feed the final sentence score."""

    SSR = 'SSR'
    SPR = 'SPR'
    SWR = 'SWR'


@dataclass(frozen=True)
class SalienceTable:
    """Per sentence salience values.

    sal is the plain mean of node scores, sal_sp the Softplus elevated
    mean, w_sent the sentence graph score and f_s the final score.
    """

    sal: Dict[int, float] = field(default_factory=dict)
    sal_sp: Dict[int, float] = field(default_factory=dict)
    w_sent: Dict[int, float] = field(default_factory=dict)
    f_s: Dict[int, float] = field(default_factory=dict)
