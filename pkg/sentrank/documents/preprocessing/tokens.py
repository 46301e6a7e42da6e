"""Tokenization and the essential-word filter."""

# Utilities
import re
from typing import Callable, Dict, FrozenSet, Iterable, List

# NLTK
from nltk.stem import PorterStemmer

# Models
from sentrank.documents.models import PosClass, Token, LexicalUnit

# Exceptions
from sentrank.utils.exceptions import ConfigurationError

WORD = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*")


def tokenize(text: str) -> List[str]:
    """Returns the word surfaces of a text in order."""

    return WORD.findall(text)


def identity_stemmer(word: str) -> str:
    """Stemmer for languages where stemming does not apply."""

    return word


def get_stemmer(language: str) -> Callable[[str], str]:
    """Returns the stemming function for a language."""

    if language == 'english':
        return PorterStemmer().stem

    if language in ('none', 'identity'):
        return identity_stemmer

    raise ConfigurationError(f'No stemmer for language {language!r}.')


class TokenFilter:
    """Builds tokens and decides which ones are essential words.

    A word is essential when it is not a stop word and its POS class,
    looked up on a table, is a noun, a verb or an adjective. Words the
    table does not know are nouns.
    """

    def __init__(
        self,
        stop_words: Iterable[str] = (),
        pos_lexicon: Dict[str, PosClass] = None,
        stemmer: Callable[[str], str] = identity_stemmer,
    ) -> None:
        self.stop_words: FrozenSet[str] = frozenset(word.lower() for word in stop_words)
        self.pos_lexicon = pos_lexicon or {}
        self.stemmer = stemmer

    def token(self, surface: str) -> Token:
        lowered = surface.lower()
        is_stop = lowered in self.stop_words
        pos_class = self.pos_lexicon.get(lowered, PosClass.NOUN)

        stem = ''
        if not is_stop and pos_class is not PosClass.OTHER:
            stem = self.stemmer(lowered) or lowered

        return Token(surface=surface, stem=stem, pos_class=pos_class, is_stop=is_stop)

    def tokens(self, text: str) -> List[Token]:
        return [self.token(surface) for surface in tokenize(text)]

    def word_unit(self, token: Token) -> LexicalUnit:
        """Returns the word unit of an essential token."""

        return LexicalUnit.word(token.stem, token.surface.lower())

    def essential_units(self, tokens: Iterable[Token]) -> List[LexicalUnit]:
        """Returns the word units of the tokens passing the filter."""

        return [self.word_unit(token) for token in tokens if token.is_essential]
