"""Text analyzer.

Composes splitting, tokenization, phrase segmentation and phrase
demotion into the documents every graph is built on.
"""

# Django
from django.conf import settings

# Utilities
from typing import Iterable, Optional

# Models
from sentrank.documents.models import Sentence, Document
from sentrank.documents.models.embeddings import EmbeddingTable

# Preprocessing
from .lexicons import PhraseLexicon, load_word_list, load_pos_lexicon
from .sentences import SentenceSplitter
from .tokens import TokenFilter, get_stemmer
from .phrases import segment_phrases, demote_unembedded_phrases


class TextAnalyzer:
    """Turns raw text or pre-split sentences into a Document.

    Without a lexicon only word units are produced, which is the
    words-only view the semantic word graph needs.
    """

    def __init__(self, splitter: SentenceSplitter, token_filter: TokenFilter) -> None:
        self.splitter = splitter
        self.token_filter = token_filter

    @classmethod
    def from_settings(cls, language: str = None, options: dict = None) -> 'TextAnalyzer':
        """Builds the analyzer from the data files named on the SENTRANK settings."""

        options = options or settings.SENTRANK
        splitter = SentenceSplitter(load_word_list(options['ABBREVIATIONS_PATH']))
        token_filter = TokenFilter(
            stop_words=load_word_list(options['STOP_WORDS_PATH']),
            pos_lexicon=load_pos_lexicon(options['POS_LEXICON_PATH']),
            stemmer=get_stemmer(language or options['LANGUAGE']),
        )
        return cls(splitter, token_filter)

    def analyze(
        self,
        text: str,
        lexicon: Optional[PhraseLexicon] = None,
        embeddings: Optional[EmbeddingTable] = None,
        doc_id: str = None,
    ) -> Document:
        """Analyzes raw text."""

        return self.analyze_sentences(self.splitter.split(text), lexicon, embeddings, doc_id)

    def analyze_sentences(
        self,
        sentences: Iterable[str],
        lexicon: Optional[PhraseLexicon] = None,
        embeddings: Optional[EmbeddingTable] = None,
        doc_id: str = None,
    ) -> Document:
        """Analyzes sentences that are already split."""

        lexicon = lexicon or PhraseLexicon()
        analyzed = []

        for index, raw in enumerate(sentences, start=1):
            raw = ' '.join(raw.split())
            tokens = self.token_filter.tokens(raw)
            units = segment_phrases(tokens, lexicon, self.token_filter)

            if embeddings is not None:
                units = demote_unembedded_phrases(units, embeddings, self.token_filter)

            analyzed.append(Sentence(index=index, raw=raw, units=tuple(units)))

        return Document(sentences=tuple(analyzed), id=doc_id)

    def words_only(self, document: Document) -> Document:
        """Returns the document with every phrase replaced by its essential words."""

        sentences = []
        for sentence in document.sentences:
            units = []
            for unit in sentence.units:
                if unit.is_phrase:
                    tokens = [self.token_filter.token(part) for part in unit.parts]
                    units.extend(self.token_filter.essential_units(tokens))
                else:
                    units.append(unit)
            sentences.append(Sentence(index=sentence.index, raw=sentence.raw, units=tuple(units)))

        return Document(sentences=tuple(sentences), id=document.id)

