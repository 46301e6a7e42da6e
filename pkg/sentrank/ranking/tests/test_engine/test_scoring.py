"""Salience tests."""

# Django
from django.test import SimpleTestCase

# Utilities
import math

import numpy as np

# Models
from sentrank.ranking.models import ScoreTable, ScoringMode

# Engine
from sentrank.ranking.engine.scoring import combine_scores, sentence_salience, softplus

# Testing
from sentrank.utils.testing import document_from

# Exceptions
from sentrank.utils.exceptions import ConfigurationError


class SoftplusTest(SimpleTestCase):
    """ln(1 + e^x)."""

    def test_values(self):
        """Known values, far tail included."""

        self.assertAlmostEqual(softplus(0.0), math.log(2))
        self.assertAlmostEqual(softplus(2.6), 2.67, delta=0.01)
        self.assertAlmostEqual(softplus(1000.0), 1000.0, delta=1e-9)

    def test_shape(self):
        """Strictly increasing, above the identity, close to it past 30."""

        x = np.linspace(-20, 30, 251)
        y = softplus(x)
        tail = np.linspace(31, 60, 30)

        self.assertTrue(np.all(np.diff(y) > 0))
        self.assertTrue(np.all(y > x))
        self.assertTrue(np.all(np.abs(softplus(tail) - tail) < 1e-9))


class SentenceSalienceTest(SimpleTestCase):
    """Plain and Softplus elevated sentence salience."""

    def setUp(self) -> None:
        """Builds two five unit sentences with their node scores."""

        self.doc = document_from([
            ['v11', 'v12', 'v13', 'v14', 'v15'],
            ['v21', 'v22', 'v23', 'v24', 'v25'],
        ])
        self.scores = ScoreTable({
            'v11': 2.6, 'v12': 2.2, 'v13': 2.1, 'v14': 0.3, 'v15': 0.2,
            'v21': 1.6, 'v22': 1.5, 'v23': 1.5, 'v24': 1.5, 'v25': 1.4,
        })

    def test_plain_mean(self):
        """Without elevation salience is the mean score."""

        self.assertAlmostEqual(sentence_salience(self.doc.sentence(1), self.scores, elevate=False), 1.48)
        self.assertAlmostEqual(sentence_salience(self.doc.sentence(2), self.scores, elevate=False), 1.50)

    def test_elevated_mean(self):
        """Softplus elevation reverses the order of the two sentences."""

        first = sentence_salience(self.doc.sentence(1), self.scores, elevate=True)
        second = sentence_salience(self.doc.sentence(2), self.scores, elevate=True)

        self.assertAlmostEqual(first, 1.768, delta=0.005)
        self.assertAlmostEqual(second, 1.702, delta=0.005)
        self.assertGreater(first, second)
        self.assertLess(
            sentence_salience(self.doc.sentence(1), self.scores, elevate=False),
            sentence_salience(self.doc.sentence(2), self.scores, elevate=False),
        )

    def test_missing_units_count_as_zero(self):
        """Unscored units score 0, or softplus(0) when elevating, and still count."""

        sentence = document_from([['v11', 'unknown']]).sentence(1)

        self.assertAlmostEqual(sentence_salience(sentence, self.scores, elevate=False), 1.3)
        self.assertAlmostEqual(
            sentence_salience(sentence, self.scores, elevate=True), (softplus(2.6) + math.log(2)) / 2
        )

    def test_repeated_units_count_once(self):
        """The mean runs over distinct units."""

        sentence = document_from([['v11', 'v11', 'v14']]).sentence(1)

        self.assertAlmostEqual(sentence_salience(sentence, self.scores, elevate=False), 1.45)

    def test_sentence_without_units(self):
        """An empty sentence has salience 0."""

        sentence = document_from([[]]).sentence(1)

        self.assertEqual(sentence_salience(sentence, self.scores), 0.0)


class CombineScoresTest(SimpleTestCase):
    """Final sentence scores."""

    def test_full_model_averages(self):
        """F_s is the mean of elevated salience and sentence graph score."""

        table = combine_scores({1: 0.4}, {1: 0.6}, ScoringMode.SSR)

        self.assertAlmostEqual(table.f_s[1], 0.5)
        self.assertEqual(table.w_sent, {1: 0.6})

    def test_sub_models_pass_through(self):
        """SPR and SWR keep the elevated salience."""

        self.assertEqual(combine_scores({1: 0.7}, None, ScoringMode.SPR).f_s, {1: 0.7})
        self.assertEqual(combine_scores({1: 0.7, 2: 0.2}, {1: 9.0}, 'SWR').f_s, {1: 0.7, 2: 0.2})

    def test_equal_sentence_scores_keep_order(self):
        """Adding the same sentence score keeps the salience ordering."""

        sal_sp = {1: 1.768, 2: 1.702}
        table = combine_scores(sal_sp, {1: 0.0, 2: 0.0}, ScoringMode.SSR)

        self.assertEqual(
            sorted(table.f_s, key=table.f_s.get, reverse=True),
            sorted(sal_sp, key=sal_sp.get, reverse=True),
        )

    def test_full_model_needs_sentence_scores(self):
        """SSR without sentence graph scores is a configuration error."""

        with self.assertRaises(ConfigurationError):
            combine_scores({1: 0.4}, None, ScoringMode.SSR)
