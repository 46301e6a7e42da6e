"""Embedding table model.

Vectors are loaded from a text vector file whose first line is
``<count> <dim>`` followed by one ``<key> <v1> ... <vdim>`` line per entry.
"""

# Utilities
import logging
from typing import Dict, Iterable, Optional, Union

import numpy as np

# Models
from .units import LexicalUnit

# Exceptions
from sentrank.utils.exceptions import (
    EmbeddingLoadError,
    MissingEmbeddingError,
    UndefinedSimilarityError,
)

logger = logging.getLogger(__name__)


class EmbeddingTable:
    """Dense vectors for words and phrases.

    The table is read only once loaded. Vectors are kept as 32-bit
    floats; similarities are accumulated in 64 bits.
    """

    def __init__(self, dim: int, vectors: Dict[str, np.ndarray], duplicates: int = 0) -> None:
        if dim <= 0:
            raise ValueError('Embedding dimension must be positive.')

        for key, vector in vectors.items():
            if vector.shape != (dim,):
                raise ValueError(f'Vector of {key!r} does not have {dim} components.')

        self.dim = dim
        self.vectors = vectors
        self.duplicates = duplicates

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, key: str) -> bool:
        return key in self.vectors

    def __getitem__(self, key: str) -> np.ndarray:
        try:
            return self.vectors[key]
        except KeyError:
            raise MissingEmbeddingError(key)

    def resolve(self, unit: Union[LexicalUnit, str]) -> Optional[str]:
        """Returns the table key a unit is stored under, or None.

        The lowercase surface form is tried first and then the unit key,
        so a stem that is a word of its own never takes that word's vector.
        """

        if isinstance(unit, str):
            return unit if unit in self.vectors else None

        for candidate in (unit.form, unit.key):
            if candidate and candidate in self.vectors:
                return candidate

        return None

    def key_vectors(self, units: Iterable[LexicalUnit]) -> Dict[str, np.ndarray]:
        """Returns one vector per unit key.

        A key takes the vector of the first of its units that resolves, in
        the order given, so every sentence of a document shares it.
        """

        vectors = {}
        for unit in units:
            if unit.key in vectors:
                continue
            resolved = self.resolve(unit)
            if resolved is not None:
                vectors[unit.key] = self.vectors[resolved]
        return vectors

    def has(self, unit: Union[LexicalUnit, str]) -> bool:
        return self.resolve(unit) is not None

    def vector_for(self, unit: Union[LexicalUnit, str]) -> np.ndarray:
        """Returns the vector of a unit, raising MissingEmbeddingError when absent."""

        key = self.resolve(unit)
        if key is None:
            raise MissingEmbeddingError(unit.key if isinstance(unit, LexicalUnit) else unit)
        return self.vectors[key]

    def cosine(self, u: str, v: str) -> float:
        return cosine(u, v, self)

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> 'EmbeddingTable':
        """Parses the text vector format in a single pass."""

        lines = iter(lines)
        try:
            header = next(lines)
        except StopIteration:
            raise EmbeddingLoadError('empty vector file, a "<count> <dim>" header is required', 1)

        fields = header.split()
        try:
            if len(fields) != 2:
                raise ValueError
            count, dim = int(fields[0]), int(fields[1])
            if count < 0 or dim <= 0:
                raise ValueError
        except ValueError:
            raise EmbeddingLoadError(f'malformed header {header.strip()!r}', 1)

        vectors = {}
        duplicates = 0
        for line_number, line in enumerate(lines, start=2):
            fields = line.split()
            if not fields:
                continue

            key, values = fields[0], fields[1:]
            if len(values) != dim:
                raise EmbeddingLoadError(
                    f'expected {dim} components for {key!r}, found {len(values)}', line_number
                )

            try:
                vector = np.array(values, dtype=np.float64)
            except ValueError:
                raise EmbeddingLoadError(f'non numeric component for {key!r}', line_number)

            if not np.all(np.isfinite(vector)):
                raise EmbeddingLoadError(f'non finite component for {key!r}', line_number)

            if key in vectors:
                duplicates += 1
            vectors[key] = vector.astype(np.float32)

        if duplicates:
            logger.warning('%d duplicate embedding keys, the last vector was kept.', duplicates)

        if len(vectors) != count:
            logger.warning('Vector file header announces %d entries, %d were read.', count, len(vectors))

        return cls(dim, vectors, duplicates=duplicates)


def load_vectors(path: str) -> EmbeddingTable:
    """Loads an embedding table from a text vector file.

    The number of duplicate keys is kept on the table's duplicates
    attribute.
    """

    with open(path, encoding='utf-8') as vector_file:
        return EmbeddingTable.from_lines(vector_file)


def cosine(u: str, v: str, table: EmbeddingTable) -> float:
    """Returns the cosine similarity between the vectors of two keys."""

    a = table[u].astype(np.float64)
    b = table[v].astype(np.float64)

    norm_a = np.linalg.norm(a)
    norm_b = np.linalg.norm(b)
    if norm_a == 0.0 or norm_b == 0.0:
        raise UndefinedSimilarityError(f'cosine is undefined for a zero vector ({u!r}, {v!r}).')

    value = float(np.dot(a, b) / (norm_a * norm_b))
    return min(1.0, max(-1.0, value))
