"""Evaluation corpus models."""

# Utilities
from dataclasses import dataclass
from typing import Tuple

# Models
from sentrank.documents.models import Document, Sentence

# Exceptions
from sentrank.utils.exceptions import DataError


@dataclass(frozen=True)
class EvalDocument:
    """A document of an evaluation corpus.

    references are abstractive summaries. judge_scores holds one ranking
    score per sentence for every judge, higher meaning more important.
    """

    id: str
    sentences: Tuple[str, ...]
    references: Tuple[str, ...] = ()
    judge_scores: Tuple[Tuple[float, ...], ...] = ()

    def __post_init__(self) -> None:
        if not self.references and not self.judge_scores:
            raise DataError(f'Document {self.id!r} has neither references nor judge scores.')

        for judge, scores in enumerate(self.judge_scores, start=1):
            if len(scores) != len(self.sentences):
                raise DataError(
                    f'Judge {judge} of document {self.id!r} scores {len(scores)} sentences, '
                    f'the document has {len(self.sentences)}.'
                )

    @property
    def n(self) -> int:
        return len(self.sentences)

    @property
    def judges(self) -> int:
        return len(self.judge_scores)

    def judge(self, number: int) -> Tuple[float, ...]:
        """Returns the scores of the 1-based judge number."""

        if not 1 <= number <= self.judges:
            raise DataError(f'Document {self.id!r} has no judge {number}, it has {self.judges}.')
        return self.judge_scores[number - 1]

    def text(self, indexes) -> str:
        """Joins the sentences at the 1-based indexes in document order."""

        return ' '.join(self.sentences[index - 1] for index in sorted(indexes))

    @property
    def full_text(self) -> str:
        return ' '.join(self.sentences)

    def as_document(self) -> Document:
        """Returns the sentences as a document without lexical units."""

        return Document(
            tuple(Sentence(index=index, raw=raw) for index, raw in enumerate(self.sentences, start=1)),
            id=self.id,
        )
