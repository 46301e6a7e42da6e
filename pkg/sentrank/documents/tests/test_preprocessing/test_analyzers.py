"""Text analyzer tests."""

# Django
from django.test import SimpleTestCase

# Models
from sentrank.documents.models import load_vectors

# Preprocessing
from sentrank.documents.preprocessing import PhraseLexicon, TextAnalyzer

# Testing
from sentrank.utils.testing import fixture_path


class TextAnalyzerTest(SimpleTestCase):
    """Analysis of the fixture news document."""

    def setUp(self) -> None:
        """Analyzes the fixture document with the shipped resources."""

        self.analyzer = TextAnalyzer.from_settings()
        self.table = load_vectors(fixture_path('vectors_small.txt'))
        self.lexicon = PhraseLexicon.load(fixture_path('phrases_small.txt'))

        with open(fixture_path('news_small.txt'), encoding='utf-8') as news:
            self.doc = self.analyzer.analyze(news.read(), self.lexicon, self.table, doc_id='news')

    def test_sentences_are_indexed_from_one(self):
        """Indexes form 1..n."""

        self.assertEqual(self.doc.n, 7)
        self.assertEqual([sentence.index for sentence in self.doc.sentences], list(range(1, 8)))

    def test_embedded_phrases_are_kept(self):
        """wall_street is on the lexicon and on the table."""

        self.assertIn('wall_street', self.doc.sentence(1).keys)

    def test_unembedded_phrases_are_demoted(self):
        """interest_rates has no vector, so its words stay instead."""

        keys = self.doc.sentence(3).keys

        self.assertNotIn('interest_rates', keys)
        self.assertIn('interest', keys)
        self.assertIn('rate', keys)

    def test_longest_phrase_without_vector_falls_back(self):
        """new_york_city has no vector and is demoted to words."""

        keys = self.doc.sentence(5).keys

        self.assertNotIn('new_york_city', keys)
        self.assertIn('citi', keys)

    def test_words_only_view(self):
        """The words only document holds no phrase."""

        words = self.analyzer.words_only(self.doc)

        self.assertTrue(all(not unit.is_phrase for unit in words.unit_vocab))
        self.assertIn('wall', words.sentence(1).keys)

    def test_pre_split_sentences(self):
        """Corpus sentences are analyzed as given."""

        doc = self.analyzer.analyze_sentences(['Stocks rose.', 'Rain   fell.'])

        self.assertEqual(doc.n, 2)
        self.assertEqual(doc.sentence(2).raw, 'Rain fell.')
