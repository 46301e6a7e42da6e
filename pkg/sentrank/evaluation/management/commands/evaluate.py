"""Evaluate command."""

# Django REST Framework
from rest_framework.renderers import JSONRenderer

# Engine
from sentrank.evaluation.engine.protocol import (
    ABSTRACTS,
    ALL_JUDGES,
    COMBINED,
    EvaluationProtocol,
    read_corpus,
    run_ablation,
)

# Serializers
from sentrank.evaluation.serializers import VariantReportSerializer

# Commands
from sentrank.utils.commands import PipelineCommandMixin, SentrankCommand

# Abstracts are compared with summaries of this many words unless told otherwise.
DEFAULT_BUDGET_WORDS = 100


def render_table(reports) -> str:
    """Returns the corpus means as a plain text table."""

    width = max([len('variant')] + [len(name) for name in reports])
    lines = [f'{"variant":<{width}}  {"R-1":>7}  {"R-2":>7}  {"R-SU4":>7}']
    for name, report in reports.items():
        mean = report.mean
        lines.append(f'{name:<{width}}  {mean.r1:7.4f}  {mean.r2:7.4f}  {mean.rsu4:7.4f}')
    return '\n'.join(lines)


class Command(PipelineCommandMixin, SentrankCommand):
    """Evaluates a ranking method and its ablated variants over a corpus.

    Prints a JSON report mapping every variant to its corpus mean ROUGE
    recalls and its per document ones.
    """

    help = 'Evaluates sentence rankings over a JSON Lines corpus with ROUGE.'

    def add_arguments(self, parser):
        parser.add_argument('corpus', help='JSON Lines corpus.')
        self.add_pipeline_arguments(parser)

        parser.add_argument('--select-pct', type=float, help='Percentage of sentences selected, 10 by default.')
        parser.add_argument(
            '--references',
            help=(
                f'"{COMBINED}" by default, "{ALL_JUDGES}", "judgeN" or "{ABSTRACTS}" for the abstractive '
                'references.'
            ),
        )
        parser.add_argument(
            '--budget-words', type=int, help=f'Word budget against abstracts, {DEFAULT_BUDGET_WORDS} by default.'
        )
        parser.add_argument('--workers', type=int, help='Documents evaluated in parallel.')
        parser.add_argument(
            '--baselines', action='store_true', help='Also report the lead, textrank and human baselines.'
        )
        parser.add_argument('--verbose', action='store_true', help='Print a results table on stderr.')

    def run(self, *args, **options):
        config = self.build_config(options)
        flags = sorted(flag.value for flag in config.ablations)
        ranker = self.build_ranker(options, config.with_ablations(()))

        corpus = read_corpus(options['corpus'])
        budget_words = self.option(options, 'budget_words')
        protocol = EvaluationProtocol(
            pct=self.option(options, 'select_pct'),
            references=self.option(options, 'references'),
            budget_words=DEFAULT_BUDGET_WORDS if budget_words is None else budget_words,
        )

        reports = run_ablation(
            corpus,
            ranker,
            flags,
            protocol=protocol,
            workers=self.option(options, 'workers'),
            baselines=bool(self.option(options, 'baselines')),
        )

        if self.option(options, 'verbose'):
            self.stderr.write(render_table(reports))

        data = {name: VariantReportSerializer(report).data for name, report in reports.items()}
        self.stdout.write(JSONRenderer().render(data).decode('utf-8'))
