"""Evaluation protocol and ablation harness tests."""

# Django
from django.test import SimpleTestCase

# Utilities
import os
import tempfile

# Models
from sentrank.evaluation.models import EvalDocument, RougeResult
from sentrank.ranking.models import Ablation, Method, PipelineConfig

# Preprocessing
from sentrank.documents.preprocessing import TextAnalyzer

# Engine
from sentrank.evaluation.engine.protocol import (
    EvaluationProtocol,
    combined_ranking,
    evaluate_budget,
    evaluate_judge,
    evaluate_selection,
    lead_ranking,
    parse_ablations,
    read_corpus,
    reference_judges,
    run_ablation,
    selection_size,
    textrank_ranking,
    top_by_scores,
    variant_name,
)
from sentrank.ranking.engine.pipeline import SentenceRanker

# Testing
from sentrank.utils.testing import fixture_path, table_from

# Exceptions
from sentrank.utils.exceptions import DataError, ParameterError


def front_loaded_corpus():
    """Three six sentence documents whose key sentences come first.

    The first three sentences use words of their own. The last three
    share two hub words, so without the position bias they outscore the
    lead. Every word has its own one-hot vector, except the middle word
    of the third sentence, which leans towards the middle word of the
    first: that pair is the only semantic edge of a document and lifts
    the third sentence over the hub sentences.
    """

    corpus, words = [], []
    for prefix in 'qwv':
        sentences = []
        for position, letter in enumerate('abcdef'):
            if position < 3:
                keys = [f'{prefix}{letter}{number}zk' for number in range(1, 6)]
            else:
                keys = [f'{prefix}h1zk', f'{prefix}h2zk'] + [f'{prefix}{letter}{number}zk' for number in range(1, 4)]
            sentences.append(' '.join(keys) + '.')
            words.extend(key for key in keys if key not in words)

        corpus.append(EvalDocument(id=prefix, sentences=tuple(sentences), judge_scores=((6, 5, 4, 3, 2, 1),)))

    vectors = {word: [1.0 if column == row else 0.0 for column in range(len(words))] for row, word in enumerate(words)}
    for prefix in 'qwv':
        first, third = vectors[f'{prefix}a3zk'], vectors[f'{prefix}c3zk']
        vectors[f'{prefix}c3zk'] = [a + 0.5 * c for a, c in zip(first, third)]

    return corpus, table_from(vectors)


class SelectionTest(SimpleTestCase):
    """Top percentage selections."""

    def setUp(self) -> None:
        """Reads the fixture corpus."""

        self.corpus = read_corpus(fixture_path('corpus_small.jsonl'))
        self.markets = self.corpus[0]

    def test_combined_ranking(self):
        """The per sentence mean of the judges."""

        self.assertEqual(combined_ranking([[1.0], [0.0]]), [0.5])
        self.assertEqual(combined_ranking([[3.0, 1.0]]), [3.0, 1.0])
        for got, expected in zip(combined_ranking(self.markets.judge_scores), [11 / 3, 3.0, 7 / 3, 1.0]):
            self.assertAlmostEqual(got, expected)

        with self.assertRaises(DataError):
            combined_ranking([[1.0, 2.0], [1.0]])
        with self.assertRaises(DataError):
            combined_ranking([])

    def test_judge_order_does_not_matter(self):
        scores = list(self.markets.judge_scores)

        self.assertEqual(combined_ranking(scores), combined_ranking(scores[::-1]))

    def test_selection_size(self):
        """ceil(pct / 100 * n), at least one sentence."""

        self.assertEqual(selection_size(10, 10), 1)
        self.assertEqual(selection_size(7, 10), 1)
        self.assertEqual(selection_size(10, 70), 7)
        self.assertEqual(selection_size(4, 100), 4)

        for n, pct in ((10, 0), (10, 101), (0, 50)):
            with self.subTest(n=n, pct=pct), self.assertRaises(ParameterError):
                selection_size(n, pct)

    def test_top_by_scores(self):
        """Ties go to the lower index, the result is in document order."""

        self.assertEqual(top_by_scores([1, 3, 3, 2], 2), [2, 3])
        self.assertEqual(top_by_scores([1, 3, 3, 2], 3), [2, 3, 4])

    def test_whole_document_scores_one(self):
        """Selecting every sentence matches every reference."""

        for doc in self.corpus:
            result = evaluate_selection(doc, lead_ranking(doc.n), 100, reference_judges(doc, 'all'))

            self.assertEqual(result, RougeResult(1.0, 1.0, 1.0))

    def test_judge_ranking_scores_one(self):
        """A method ranking like the sole reference judge selects the same text."""

        for pct in (25, 50, 75):
            result = evaluate_selection(self.markets, lead_ranking(4), pct, [self.markets.judge(1)])

            self.assertEqual(result.r1, 1.0)

    def test_reference_judges(self):
        self.assertEqual(len(reference_judges(self.markets, 'all')), 3)
        self.assertEqual(reference_judges(self.markets, 'judge2'), [self.markets.judge(2)])
        self.assertEqual(reference_judges(self.markets, 'combined'), [combined_ranking(self.markets.judge_scores)])

        with self.assertRaises(DataError):
            reference_judges(self.markets, 'judge4')
        with self.assertRaises(ParameterError):
            reference_judges(self.markets, 'best')

    def test_missing_judge_scores(self):
        doc = EvalDocument(id='abstract', sentences=('A b.',), references=('A b.',))

        with self.assertRaises(DataError):
            reference_judges(doc, 'judge1')

    def test_judge_against_the_others(self):
        """Leave one out scores of a judge are recalls."""

        result = evaluate_judge(self.markets, 1, 50)

        self.assertTrue(0.0 <= result.r1 <= 1.0)
        with self.assertRaises(DataError):
            evaluate_judge(EvalDocument(id='one', sentences=('a b',), judge_scores=((1,),)), 1, 50)

    def test_word_budget_against_abstracts(self):
        """The word budget prefix is scored against the abstractive references."""

        mixed = self.corpus[2]

        whole = evaluate_budget(mixed, lead_ranking(mixed.n), 100)
        lead = evaluate_budget(mixed, lead_ranking(mixed.n), 5)

        self.assertGreaterEqual(whole.r1, lead.r1)
        self.assertAlmostEqual(lead.r1, 4 / 9)
        with self.assertRaises(DataError):
            evaluate_budget(self.markets, lead_ranking(4), 100)

    def test_protocol(self):
        protocol = EvaluationProtocol(pct=100)

        self.assertEqual(protocol.evaluate(self.markets, lead_ranking(4)), RougeResult(1.0, 1.0, 1.0))
        self.assertEqual(protocol.evaluate_human(self.markets), RougeResult(1.0, 1.0, 1.0))


class AblationTest(SimpleTestCase):
    """Ablation harness."""

    def setUp(self) -> None:
        """Builds a word model ranker over the front loaded corpus."""

        self.corpus, table = front_loaded_corpus()
        self.ranker = SentenceRanker(table, PipelineConfig(method=Method.SWR), analyzer=TextAnalyzer.from_settings())

    def test_flags(self):
        self.assertEqual(parse_ablations(['NSP', 'nse', Ablation.NSE]), [Ablation.NSE, Ablation.NSP])
        self.assertEqual(variant_name('swr', [Ablation.NSE, Ablation.NAS]), 'swr_nse_nas')

        with self.assertRaises(ParameterError):
            parse_ablations(['nothing'])

    def test_empty_flags_run_the_baseline(self):
        """Without flags only the configured method is reported."""

        reports = run_ablation(self.corpus, self.ranker, [], workers=1)

        self.assertEqual(list(reports), ['swr'])
        self.assertEqual([doc_id for doc_id, _ in reports['swr'].documents], ['q', 'w', 'v'])

    def test_position_bias_finds_the_lead(self):
        """The structure bias beats its ablation on front loaded documents."""

        reports = run_ablation(
            self.corpus, self.ranker, ['nse', 'nas', 'nsc', 'nsp'], EvaluationProtocol(pct=10), workers=2
        )

        self.assertEqual(
            set(reports),
            {'swr', 'swr_nse', 'swr_nas', 'swr_nsc', 'swr_nsp', 'swr_nse_nas_nsc_nsp'},
        )
        self.assertEqual(reports['swr'].mean.r1, 1.0)
        self.assertGreater(reports['swr'].mean.r1, reports['swr_nas'].mean.r1)
        for name, report in reports.items():
            with self.subTest(variant=name):
                self.assertEqual(len(report.documents), 3)
                self.assertGreaterEqual(reports['swr'].mean.r1, report.mean.r1)

    def test_semantic_edges_lift_the_lead(self):
        """Without the semantic edge a hub sentence takes the place of the third one."""

        reports = run_ablation(self.corpus, self.ranker, ['nse'], EvaluationProtocol(pct=70), workers=1)

        self.assertEqual(reports['swr'].mean.r1, 1.0)
        self.assertGreater(reports['swr'].mean.r1, reports['swr_nse'].mean.r1)

        ranked = self.ranker.rank_sentences(self.corpus[0].sentences).ranked
        ablated = self.ranker.with_config(self.ranker.config.with_ablations({Ablation.NSE})).rank_sentences(
            self.corpus[0].sentences
        ).ranked
        self.assertEqual(ranked.order[:3], (1, 3, 2))
        self.assertEqual(ablated.order[-1], 3)

    def test_baselines(self):
        """Lead and textrank baselines are reported next to the variants."""

        reports = run_ablation(self.corpus, self.ranker, [], EvaluationProtocol(pct=10), baselines=True)

        self.assertEqual(set(reports), {'swr', 'lead', 'textrank'})
        self.assertEqual(reports['lead'].mean.r1, 1.0)
        self.assertLess(reports['textrank'].mean.r1, reports['swr'].mean.r1)

    def test_textrank_ranking(self):
        """Unbiased word scores put a hub sentence first, all sentences in one cluster."""

        ranking = textrank_ranking(self.ranker, self.corpus[0])

        self.assertIn(ranking.order[0], (4, 5, 6))
        self.assertEqual(sorted(ranking.order), list(range(1, 7)))
        self.assertEqual(set(ranking.cluster.values()), {0})

    def test_textrank_keeps_the_order_of_tiny_documents(self):
        """A document with a single distinct word has no word graph."""

        doc = EvalDocument(id='tiny', sentences=('qa1zk.', 'qa1zk.'), judge_scores=((1, 2),))

        with self.assertLogs('sentrank', level='WARNING'):
            ranking = textrank_ranking(self.ranker, doc)

        self.assertEqual(ranking.order, (1, 2))

    def test_invalid_runs(self):
        with self.assertRaises(DataError):
            run_ablation([], self.ranker, [])
        with self.assertRaises(ParameterError):
            run_ablation(self.corpus, self.ranker, ['xyz'])
        with self.assertRaises(ParameterError):
            run_ablation(self.corpus, self.ranker, [], workers=0)


class ReadCorpusTest(SimpleTestCase):
    """JSON Lines corpus ingestion."""

    def read(self, *lines):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'corpus.jsonl')
            with open(path, 'w', encoding='utf-8') as corpus:
                corpus.write('\n'.join(lines) + '\n')
            return read_corpus(path)

    def test_fixture_corpus(self):
        corpus = read_corpus(fixture_path('corpus_small.jsonl'))

        self.assertEqual([doc.id for doc in corpus], ['markets', 'weather', 'mixed'])
        self.assertEqual(corpus[2].references, ('Inflation fell while rates rose and investors bought shares.',))
        self.assertEqual(corpus[1].judges, 3)

    def test_schema_violations_name_the_line(self):
        """The first bad line is reported."""

        good = '{"id": "a", "sentences": ["One."], "references": ["One."]}'
        cases = (
            '{"id": "b", "sentences": ["One."]',
            '{"id": "b", "sentences": [], "references": ["One."]}',
            '{"id": "b", "sentences": ["One."]}',
            '{"id": "b", "sentences": ["One.", "Two."], "judge_scores": [[1, 2], [1]]}',
        )

        for bad in cases:
            with self.subTest(line=bad), self.assertRaises(DataError) as raised:
                self.read(good, bad)
            self.assertEqual(raised.exception.line_number, 2)

    def test_empty_corpus(self):
        with self.assertRaises(DataError):
            self.read('', '  ')
