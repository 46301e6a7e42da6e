"""Cluster assignment models."""

# Utilities
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional

import numpy as np


@dataclass(frozen=True)
class ClusterAssignment:
    """Subtopic clusters of the sentences of a document.

    Cluster ids run from 0 to k - 1, in the order their first member
    appears in the document. exemplars is only set by affinity
    propagation.
    """

    labels: Dict[int, int]
    exemplars: Optional[FrozenSet[int]] = None

    def __post_init__(self) -> None:
        ids = set(self.labels.values())
        if ids != set(range(len(ids))):
            raise ValueError('Cluster ids must be contiguous from 0.')

    @property
    def k(self) -> int:
        return len(set(self.labels.values()))

    def members(self, cluster: int) -> List[int]:
        return sorted(index for index, label in self.labels.items() if label == cluster)

    @classmethod
    def from_labels(cls, indexes: List[int], labels, exemplars=None) -> 'ClusterAssignment':
        """Renumbers raw labels by first appearance along indexes."""

        renumbered = {}
        assignment = {}
        for index, label in zip(indexes, labels):
            label = int(label)
            renumbered.setdefault(label, len(renumbered))
            assignment[index] = renumbered[label]

        return cls(assignment, frozenset(exemplars) if exemplars is not None else None)

    @classmethod
    def single(cls, indexes: List[int], exemplar: Optional[int] = None) -> 'ClusterAssignment':
        """Returns every sentence in one cluster."""

        exemplars = frozenset({exemplar}) if exemplar is not None else None
        return cls({index: 0 for index in indexes}, exemplars)

    def dump(self) -> List[str]:
        """Returns ``sentence_index<TAB>cluster_id`` lines in sentence order."""

        return [f'{index}\t{self.labels[index]}' for index in sorted(self.labels)]


@dataclass
class APState:
    """Message matrices of affinity propagation.

    S holds the similarities with the preference on its diagonal,
    R the responsibilities and A the availabilities.
    """

    S: np.ndarray
    R: np.ndarray
    A: np.ndarray
    preference: float
    damping: float = 0.5

    def __post_init__(self) -> None:
        if not 0.0 <= self.damping < 1.0:
            raise ValueError('Damping must lie in [0, 1).')

    @classmethod
    def start(cls, S: np.ndarray, preference: float, damping: float = 0.5) -> 'APState':
        return cls(S=S, R=np.zeros_like(S), A=np.zeros_like(S), preference=preference, damping=damping)

    def exemplars(self) -> np.ndarray:
        """Returns the indexes i with r_ii + a_ii > 0."""

        return np.flatnonzero(np.diag(self.R) + np.diag(self.A) > 0)
