"""Token and lexical unit models."""

# Utilities
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple

PHRASE_SEPARATOR = '_'


class PosClass(str, Enum):
    """Coarse part of speech classes the essential-word filter knows about."""

    NOUN = 'noun'
    VERB = 'verb'
    ADJECTIVE = 'adjective'
    OTHER = 'other'


ESSENTIAL_POS = frozenset({PosClass.NOUN, PosClass.VERB, PosClass.ADJECTIVE})


class UnitKind(str, Enum):
    """Kinds of lexical units."""

    WORD = 'word'
    PHRASE = 'phrase'


@dataclass(frozen=True)
class Token:
    """A word token of a sentence.

    surface keeps the original casing, stem is empty for tokens
    that can never become an essential word.
    """

    surface: str
    stem: str
    pos_class: PosClass
    is_stop: bool

    @property
    def is_essential(self) -> bool:
        """Returns if the token passes the POS, stop-word and stem filters."""

        return not self.is_stop and self.pos_class in ESSENTIAL_POS and bool(self.stem)


@dataclass(frozen=True)
class LexicalUnit:
    """A word or a phrase node of the graphs.

    Words are keyed by their stem, phrases by their lowercased tokens
    joined by an underscore. form is the lowercased surface text and is
    only used to look embeddings up, it does not take part in equality.
    """

    kind: UnitKind
    key: str
    form: str = field(default='', compare=False)

    def __post_init__(self) -> None:
        if self.kind is UnitKind.PHRASE and len(self.key.split(PHRASE_SEPARATOR)) < 2:
            raise ValueError(f'Phrase keys need at least two tokens, got {self.key!r}.')
        if self.kind is UnitKind.WORD and PHRASE_SEPARATOR in self.key:
            raise ValueError(f'Word keys can not contain {PHRASE_SEPARATOR!r}, got {self.key!r}.')

    @classmethod
    def word(cls, stem: str, form: str = '') -> 'LexicalUnit':
        return cls(UnitKind.WORD, stem, form or stem)

    @classmethod
    def phrase(cls, tokens: Tuple[str, ...]) -> 'LexicalUnit':
        key = PHRASE_SEPARATOR.join(token.lower() for token in tokens)
        return cls(UnitKind.PHRASE, key, key)

    @property
    def is_phrase(self) -> bool:
        return self.kind is UnitKind.PHRASE

    @property
    def parts(self) -> Tuple[str, ...]:
        """Returns the lowercased tokens of a phrase, or the word itself."""

        if self.is_phrase:
            return tuple(self.key.split(PHRASE_SEPARATOR))
        return (self.form or self.key,)

    def __str__(self) -> str:
        return f'{self.kind.value}:{self.key}'
