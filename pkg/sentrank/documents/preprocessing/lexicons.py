"""Loaders of the lexical resources shipped as data files."""

# Utilities
from typing import Dict, FrozenSet, Iterable

# Models
from sentrank.documents.models import PosClass
from sentrank.documents.models.units import PHRASE_SEPARATOR

# Exceptions
from sentrank.utils.exceptions import DataError


def _content_lines(path: str) -> Iterable[tuple]:
    """Yields (line number, stripped line) skipping blanks and # comments."""

    with open(path, encoding='utf-8') as data_file:
        for line_number, line in enumerate(data_file, start=1):
            line = line.strip()
            if line and not line.startswith('#'):
                yield line_number, line


def load_word_list(path: str) -> FrozenSet[str]:
    """Loads a one-word-per-line file (stop words, abbreviations) lowercased."""

    return frozenset(line.lower() for _, line in _content_lines(path))


def load_pos_lexicon(path: str) -> Dict[str, PosClass]:
    """Loads a ``word<TAB>pos_class`` file."""

    lexicon = {}
    for line_number, line in _content_lines(path):
        try:
            word, pos_class = line.split('\t')
            lexicon[word.lower()] = PosClass(pos_class.strip())
        except ValueError:
            raise DataError(f'expected "word<TAB>pos_class", got {line!r}', line_number)

    return lexicon


class PhraseLexicon:
    """Set of known phrases, as lowercase tokens joined by underscores."""

    def __init__(self, phrases: Iterable[str] = ()) -> None:
        self.phrases = frozenset(
            phrase.lower() for phrase in phrases if len(phrase.split(PHRASE_SEPARATOR)) >= 2
        )
        self.max_tokens = max(
            (len(phrase.split(PHRASE_SEPARATOR)) for phrase in self.phrases),
            default=0,
        )

    def __contains__(self, key: str) -> bool:
        return key in self.phrases

    def __len__(self) -> int:
        return len(self.phrases)

    def __bool__(self) -> bool:
        return bool(self.phrases)

    @classmethod
    def load(cls, path: str) -> 'PhraseLexicon':
        return cls(line for _, line in _content_lines(path))
