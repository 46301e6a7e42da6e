"""Sentence bag model."""

# Utilities
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

# Models
from sentrank.documents.models import LexicalUnit
from sentrank.documents.models.embeddings import EmbeddingTable


@dataclass(frozen=True, eq=False)
class SentenceBag:
    """Normalized bag of the distinct embedded units of a sentence.

    vectors holds one row per key, in the order of keys.
    """

    keys: Tuple[str, ...]
    weights: np.ndarray
    vectors: np.ndarray

    def __post_init__(self) -> None:
        if len(set(self.keys)) != len(self.keys):
            raise ValueError('Bag keys must be distinct.')
        if self.keys and abs(float(np.sum(self.weights)) - 1.0) > 1e-9:
            raise ValueError('Bag weights must sum to 1.')
        if np.any(self.weights < 0):
            raise ValueError('Bag weights can not be negative.')

    def __len__(self) -> int:
        return len(self.keys)

    @property
    def is_empty(self) -> bool:
        return not self.keys

    @classmethod
    def from_units(
        cls,
        units: Iterable[LexicalUnit],
        table: EmbeddingTable,
        cap: int = 30,
        key_vectors: Optional[Dict[str, np.ndarray]] = None,
    ) -> 'SentenceBag':
        """Builds the bag of a sentence's units.

        Units without an embedding are left out. When more than cap
        distinct units remain, the cap most frequent are kept, ties
        going to the earliest. key_vectors, the document wide vector of
        every key, defaults to the vectors resolved from these units.
        """

        units = list(units)
        if key_vectors is None:
            key_vectors = table.key_vectors(units)

        embedded = [unit for unit in units if unit.key in key_vectors]
        counts = Counter(unit.key for unit in embedded)
        first_seen = {}
        for position, unit in enumerate(embedded):
            first_seen.setdefault(unit.key, (position, unit))

        keys = sorted(counts, key=lambda key: (-counts[key], first_seen[key][0]))[:cap]
        keys.sort(key=lambda key: first_seen[key][0])

        if not keys:
            return cls.empty(table.dim)

        weights = np.array([counts[key] for key in keys], dtype=np.float64)
        vectors = np.vstack([key_vectors[key] for key in keys]).astype(np.float64)

        return cls(tuple(keys), weights / weights.sum(), vectors)

    @classmethod
    def from_weights(cls, weights: dict, table: EmbeddingTable) -> 'SentenceBag':
        """Builds a bag from a key to weight mapping, normalizing the weights."""

        keys = tuple(weights)
        values = np.array([weights[key] for key in keys], dtype=np.float64)
        if not keys:
            return cls.empty(table.dim)

        vectors = np.vstack([table[key] for key in keys]).astype(np.float64)
        return cls(keys, values / values.sum(), vectors)

    @classmethod
    def empty(cls, dim: int) -> 'SentenceBag':
        return cls((), np.zeros(0), np.zeros((0, dim)))
