"""Rule based sentence splitting.

A sentence ends at terminal punctuation followed by whitespace or the
end of the text, unless the word carrying the period is a known
abbreviation. CJK terminal marks end a sentence on their own, and a
blank line always closes a sentence.
"""

# Utilities
import re
from typing import FrozenSet, Iterable, List

PARAGRAPH_BREAK = re.compile(r'\n\s*\n')

BOUNDARY = re.compile(
    r'[.!?]+["\'’”)\]]*(?=\s|$)'
    r'|[。！？]+["\'’”」』)\]]*'
)


class SentenceSplitter:
    """Splits text into sentences given a set of abbreviations."""

    def __init__(self, abbreviations: Iterable[str] = ()) -> None:
        self.abbreviations: FrozenSet[str] = frozenset(word.lower() for word in abbreviations)

    def split(self, text: str) -> List[str]:
        sentences = []
        for paragraph in PARAGRAPH_BREAK.split(text):
            sentences.extend(self._split_paragraph(paragraph))
        return sentences

    def _split_paragraph(self, paragraph: str) -> List[str]:
        sentences = []
        start = 0

        for match in BOUNDARY.finditer(paragraph):
            if self._is_abbreviation(paragraph, match):
                continue

            sentences.append(paragraph[start:match.end()])
            start = match.end()

        sentences.append(paragraph[start:])

        # Whitespace runs collapse to a single space
        return [' '.join(sentence.split()) for sentence in sentences if sentence.strip()]

    def _is_abbreviation(self, paragraph: str, match: 're.Match') -> bool:
        """Returns if the period of the match belongs to a listed abbreviation."""

        if match.group() != '.':
            return False

        word_start = max(paragraph.rfind(' ', 0, match.start()), paragraph.rfind('\n', 0, match.start()))
        word = paragraph[word_start + 1:match.end()].lstrip('"\'(“[').lower()

        return word in self.abbreviations


def split_sentences(text: str, abbreviations: Iterable[str] = ()) -> List[str]:
    """Splits UTF-8 text into raw sentence strings."""

    return SentenceSplitter(abbreviations).split(text)
