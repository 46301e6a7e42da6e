"""Round-robin selection and budget tests."""

# Django
from django.test import SimpleTestCase

# Utilities
import numpy as np

# Models
from sentrank.ranking.models import BudgetUnit, ClusterAssignment, SalienceTable

# Engine
from sentrank.ranking.engine.selection import cut_budget, rank_sentences, reading_layers

# Testing
from sentrank.utils.testing import document_from

# Exceptions
from sentrank.utils.exceptions import ParameterError


def reference_order(unit_scores, labels):
    """Step by step round robin: sort clusters by best remaining score, take one from each."""

    remaining = {}
    for index in sorted(unit_scores):
        remaining.setdefault(labels[index], []).append(index)

    order = []
    while any(remaining.values()):
        best = {
            label: max(members, key=lambda index: (unit_scores[index], -index))
            for label, members in remaining.items() if members
        }
        for label in sorted(best, key=lambda label: (-unit_scores[best[label]], best[label])):
            order.append(best[label])
            remaining[label].remove(best[label])
    return order


class RankSentencesTest(SimpleTestCase):
    """Ranking by unit score, one cluster at a time."""

    def setUp(self) -> None:
        """Builds a document whose sentences all have the same length."""

        self.doc = document_from([[f'k{index}'] for index in range(1, 10)])
        self.length = self.doc.sentence(1).char_length

    def salience(self, unit_scores):
        return SalienceTable(f_s={index: score * self.length for index, score in unit_scores.items()})

    def rank(self, unit_scores, labels):
        doc = document_from([[f'k{index}'] for index in sorted(unit_scores)])
        return rank_sentences(self.salience(unit_scores), ClusterAssignment(labels), doc)

    def test_single_cluster_sorts(self):
        """With one cluster the ranking is the unit score order."""

        ranked = self.rank({1: 0.3, 2: 0.9, 3: 0.5}, {1: 0, 2: 0, 3: 0})

        self.assertEqual(ranked.order, (2, 3, 1))
        self.assertEqual(set(ranked.round.values()), {1, 2, 3})

    def test_clusters_take_turns(self):
        """The strongest cluster goes first in every round."""

        ranked = self.rank({1: 0.9, 2: 0.8, 3: 0.85}, {1: 0, 2: 0, 3: 1})

        self.assertEqual(ranked.order, (1, 3, 2))
        self.assertEqual(ranked.round, {1: 1, 3: 1, 2: 2})

    def test_cluster_order_is_sorted_every_round(self):
        """A cluster leading round 1 can trail in round 2."""

        ranked = self.rank({1: 0.9, 2: 0.1, 3: 0.8, 4: 0.7}, {1: 0, 2: 0, 3: 1, 4: 1})

        self.assertEqual(ranked.order, (1, 3, 4, 2))

    def test_ties_go_to_lower_index(self):
        """Equal unit scores fall back to sentence order."""

        ranked = self.rank({1: 0.5, 2: 0.5, 3: 0.5}, {1: 0, 2: 1, 3: 0})

        self.assertEqual(ranked.order, (1, 2, 3))

    def test_matches_reference_execution(self):
        """Random instances agree with a step by step execution."""

        random = np.random.RandomState(21)
        for _ in range(10):
            n = random.randint(1, 10)
            unit_scores = {index: float(random.choice([0.1, 0.2, 0.3, random.rand()])) for index in range(1, n + 1)}
            k = random.randint(1, n + 1)
            raw = random.randint(0, k, size=n)
            labels = ClusterAssignment.from_labels(list(range(1, n + 1)), raw).labels

            ranked = self.rank(unit_scores, labels)

            with self.subTest(scores=unit_scores, labels=labels):
                self.assertEqual(list(ranked.order), reference_order(unit_scores, labels))

    def test_rounds_and_clusters_are_consistent(self):
        """Scores never increase within a round or within a cluster."""

        random = np.random.RandomState(3)
        unit_scores = {index: float(random.rand()) for index in range(1, 10)}
        labels = {index: index % 3 for index in range(1, 10)}

        ranked = self.rank(unit_scores, labels)

        self.assertEqual(sorted(ranked.order), list(range(1, 10)))
        for first, second in zip(ranked.order, ranked.order[1:]):
            if ranked.round[first] == ranked.round[second]:
                self.assertGreaterEqual(unit_scores[first], unit_scores[second])
            if labels[first] == labels[second]:
                self.assertGreaterEqual(unit_scores[first], unit_scores[second])

    def test_scaling_scores_keeps_ranking(self):
        """Multiplying every score by a positive constant changes nothing."""

        unit_scores = {1: 0.2, 2: 0.7, 3: 0.4, 4: 0.9}
        labels = {1: 0, 2: 1, 3: 0, 4: 1}

        self.assertEqual(
            self.rank(unit_scores, labels).order,
            self.rank({index: 3.5 * score for index, score in unit_scores.items()}, labels).order,
        )

    def test_unit_score_divides_by_characters(self):
        """s' = F_s / l with l the character length."""

        doc = document_from([['a'], ['bbbb']])

        ranked = rank_sentences(SalienceTable(f_s={1: 1.0, 2: 1.0}), ClusterAssignment.single([1, 2]), doc)

        self.assertAlmostEqual(ranked.unit_scores[1], 1.0 / len('a.'))
        self.assertAlmostEqual(ranked.unit_scores[2], 1.0 / len('bbbb.'))
        self.assertEqual(ranked.order, (1, 2))

    def test_sentences_without_units_come_last(self):
        """Sentences without units close the ranking in document order."""

        doc = document_from([[], ['a'], [], ['b']])

        ranked = rank_sentences(
            SalienceTable(f_s={1: 0.0, 2: 0.1, 3: 0.0, 4: 0.5}), ClusterAssignment.single([1, 2, 3, 4]), doc
        )

        self.assertEqual(ranked.order, (4, 2, 1, 3))
        self.assertEqual(ranked.round[1], ranked.round[3])


class BudgetTest(SimpleTestCase):
    """Budget cuts and reading layers."""

    def setUp(self) -> None:
        """Ranks a document whose sentences have 2, 3, 4 and 5 words."""

        self.doc = document_from([['a', 'b'], ['c', 'd', 'e'], ['f', 'g', 'h', 'i'], ['j', 'k', 'l', 'm', 'n']])
        f_s = {1: 0.1, 2: 0.4, 3: 0.3, 4: 0.9}
        self.ranked = rank_sentences(SalienceTable(f_s=f_s), ClusterAssignment.single([1, 2, 3, 4]), self.doc)

    def test_ranking(self):
        self.assertEqual(self.ranked.order, (4, 2, 3, 1))

    def test_large_budget_keeps_everything(self):
        """A budget over the document length keeps every sentence."""

        self.assertEqual(cut_budget(self.ranked, self.doc, 100).indexes, (1, 2, 3, 4))

    def test_prefix_in_document_order(self):
        """The longest fitting prefix of the ranking, re-sorted."""

        cut = cut_budget(self.ranked, self.doc, 9)

        self.assertEqual(cut.indexes, (2, 4))
        self.assertFalse(cut.over_budget)

    def test_prefix_matches_cumulative_scan(self):
        """Every word budget agrees with a cumulative sum scan."""

        lengths = {index: self.doc.sentence(index).word_count for index in range(1, 5)}

        for budget in range(5, 20):
            kept, used = [], 0
            for index in self.ranked.order:
                if used + lengths[index] > budget:
                    break
                kept.append(index)
                used += lengths[index]

            self.assertEqual(cut_budget(self.ranked, self.doc, budget).indexes, tuple(sorted(kept)))

    def test_top_sentence_over_budget(self):
        """A top sentence longer than the budget is kept and flagged."""

        cut = cut_budget(self.ranked, self.doc, 1)

        self.assertEqual(cut.indexes, (4,))
        self.assertTrue(cut.over_budget)

    def test_other_units(self):
        """Budgets in characters and in sentences."""

        chars = len(self.doc.sentence(4).raw) + len(self.doc.sentence(2).raw)

        self.assertEqual(cut_budget(self.ranked, self.doc, chars, BudgetUnit.CHARS).indexes, (2, 4))
        self.assertEqual(cut_budget(self.ranked, self.doc, 3, 'sentences').indexes, (2, 3, 4))

    def test_budget_must_be_positive(self):
        with self.assertRaises(ParameterError):
            cut_budget(self.ranked, self.doc, 0)

    def test_reading_layers(self):
        """Consecutive slices of the ranking, each in document order."""

        self.assertEqual(reading_layers(self.ranked, 2), [[2, 4], [1, 3]])
        self.assertEqual(reading_layers(self.ranked, 3), [[2, 3, 4], [1]])

        with self.assertRaises(ParameterError):
            reading_layers(self.ranked, 0)
