"""Sentence and document models."""

# Utilities
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

# Models
from .units import LexicalUnit


@dataclass(frozen=True)
class Sentence:
    """A sentence of a document.

    index is the 1-based position of the sentence, raw its text with
    whitespace runs collapsed and units the essential units in order,
    repeats included.
    """

    index: int
    raw: str
    units: Tuple[LexicalUnit, ...] = ()

    @property
    def char_length(self) -> int:
        """Returns l_i, the number of characters of the sentence, spaces included."""

        return len(self.raw)

    @property
    def word_count(self) -> int:
        return len(self.raw.split())

    @property
    def keys(self) -> Tuple[str, ...]:
        return tuple(unit.key for unit in self.units)

    @property
    def distinct_keys(self) -> FrozenSet[str]:
        return frozenset(self.keys)

    @property
    def essential_count(self) -> int:
        """Returns |S_i|, the number of distinct essential units."""

        return len(self.distinct_keys)

    def distinct_units(self) -> Tuple[LexicalUnit, ...]:
        """Returns the units of the sentence without repeats, first occurrence kept."""

        seen = {}
        for unit in self.units:
            seen.setdefault(unit.key, unit)
        return tuple(seen.values())


@dataclass(frozen=True)
class Document:
    """A document made of n sentences indexed from 1."""

    sentences: Tuple[Sentence, ...]
    id: Optional[str] = None

    def __post_init__(self) -> None:
        indexes = [sentence.index for sentence in self.sentences]
        if indexes != list(range(1, len(indexes) + 1)):
            raise ValueError('Sentence indexes must be contiguous from 1.')

    @property
    def n(self) -> int:
        return len(self.sentences)

    @property
    def unit_vocab(self) -> FrozenSet[LexicalUnit]:
        return frozenset(unit for sentence in self.sentences for unit in sentence.units)

    def sentence(self, index: int) -> Sentence:
        """Returns the sentence at the 1-based index."""

        return self.sentences[index - 1]

    def units(self) -> List[LexicalUnit]:
        """Returns every unit occurrence in document order."""

        return [unit for sentence in self.sentences for unit in sentence.units]

    def units_by_key(self) -> dict:
        """Returns the first unit seen for every key, in document order."""

        units = {}
        for sentence in self.sentences:
            for unit in sentence.units:
                units.setdefault(unit.key, unit)
        return units
