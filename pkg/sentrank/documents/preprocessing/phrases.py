"""Phrase segmentation by greedy longest match against a phrase lexicon."""

# Utilities
from typing import List, Sequence, Union

# Models
from sentrank.documents.models import Token, LexicalUnit
from sentrank.documents.models.embeddings import EmbeddingTable
from sentrank.documents.models.units import PHRASE_SEPARATOR

# Preprocessing
from .lexicons import PhraseLexicon
from .tokens import TokenFilter


def segment_phrases(
    tokens: Sequence[Union[Token, LexicalUnit]],
    lexicon: PhraseLexicon,
    token_filter: TokenFilter = None,
) -> List[LexicalUnit]:
    """Turns tokens into essential lexical units.

    Scanning left to right, the longest token span whose lowercase
    underscore-joined form is in the lexicon becomes a phrase unit. A
    token not covered by a phrase becomes a word unit when it is
    essential and is dropped otherwise. Units already present in the
    input pass through unchanged, so segmenting a segmentation is a
    no-op.
    """

    token_filter = token_filter or TokenFilter()
    units = []
    position = 0

    while position < len(tokens):
        item = tokens[position]

        if isinstance(item, LexicalUnit):
            units.append(item)
            position += 1
            continue

        span = _longest_phrase(tokens, position, lexicon)
        if span:
            surfaces = tuple(token.surface for token in tokens[position:position + span])
            units.append(LexicalUnit.phrase(surfaces))
            position += span
            continue

        if item.is_essential:
            units.append(token_filter.word_unit(item))
        position += 1

    return units


def _longest_phrase(tokens: Sequence, start: int, lexicon: PhraseLexicon) -> int:
    """Returns the token length of the longest lexicon phrase at start, 0 if none."""

    longest = min(lexicon.max_tokens, len(tokens) - start)

    for length in range(longest, 1, -1):
        span = tokens[start:start + length]
        if any(isinstance(item, LexicalUnit) for item in span):
            continue

        key = PHRASE_SEPARATOR.join(token.surface.lower() for token in span)
        if key in lexicon:
            return length

    return 0


def demote_unembedded_phrases(
    units: Sequence[LexicalUnit],
    embeddings: EmbeddingTable,
    token_filter: TokenFilter,
) -> List[LexicalUnit]:
    """Replaces every phrase without an embedding by its essential words."""

    demoted = []
    for unit in units:
        if not unit.is_phrase or embeddings.has(unit):
            demoted.append(unit)
            continue

        tokens = [token_filter.token(part) for part in unit.parts]
        demoted.extend(token_filter.essential_units(tokens))

    return demoted
