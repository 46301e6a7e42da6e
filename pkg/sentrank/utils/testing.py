"""Helpers shared by the test suites."""

# Django
from django.conf import settings

# Utilities
import os
from typing import Dict, Sequence

import numpy as np

# Models
from sentrank.documents.models import Document, EmbeddingTable, LexicalUnit, Sentence
from sentrank.documents.models.units import PHRASE_SEPARATOR


def fixture_path(name: str) -> str:
    return os.path.join(settings.FIXTURE_DIRS[0], name)


def table_from(vectors: Dict[str, Sequence[float]]) -> EmbeddingTable:
    """Builds an embedding table from a key to components mapping."""

    dim = len(next(iter(vectors.values())))
    return EmbeddingTable(dim, {key: np.asarray(value, dtype=np.float32) for key, value in vectors.items()})


def unit_for(key: str) -> LexicalUnit:
    if PHRASE_SEPARATOR in key:
        return LexicalUnit.phrase(tuple(key.split(PHRASE_SEPARATOR)))
    return LexicalUnit.word(key)


def document_from(sentences: Sequence[Sequence[str]], doc_id: str = None) -> Document:
    """Builds a document whose sentences hold the given unit keys.

    Keys holding an underscore become phrases. The raw text is the keys
    joined by spaces, with a final period.
    """

    return Document(
        tuple(
            Sentence(index=index, raw=' '.join(keys) + '.', units=tuple(unit_for(key) for key in keys))
            for index, keys in enumerate(sentences, start=1)
        ),
        id=doc_id,
    )
