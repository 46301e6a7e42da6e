"""Documents app preprocessing."""

from .lexicons import (
    PhraseLexicon,
    load_word_list,
    load_pos_lexicon,
)
from .sentences import SentenceSplitter, split_sentences
from .tokens import TokenFilter, tokenize
from .phrases import segment_phrases, demote_unembedded_phrases
from .analyzers import TextAnalyzer
