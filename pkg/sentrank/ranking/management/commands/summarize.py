"""Summarize command."""

# Utilities
from typing import Tuple

# Models
from sentrank.ranking.models import BudgetUnit

# Engine
from sentrank.ranking.engine.selection import cut_budget, reading_layers

# Commands
from sentrank.ranking.management.commands.rank import read_text
from sentrank.utils.commands import PipelineCommandMixin, SentrankCommand

# Exceptions
from sentrank.utils.exceptions import ConfigurationError

LAYERS = 'layers'
BUDGET_OPTIONS = tuple(f'budget_{unit.value}' for unit in BudgetUnit) + (LAYERS,)


class Command(PipelineCommandMixin, SentrankCommand):
    """Prints a budgeted extractive summary, or the reading layers of a document.

    Summary sentences are printed one per line in document order. Layers
    are separated by a blank line.
    """

    help = 'Summarizes a UTF-8 text document within a budget.'

    def add_arguments(self, parser):
        parser.add_argument('input', help='UTF-8 text document, paragraphs separated by blank lines.')
        self.add_pipeline_arguments(parser)

        budget = parser.add_mutually_exclusive_group()
        budget.add_argument('--budget-words', type=int, help='Summary length in words.')
        budget.add_argument('--budget-chars', type=int, help='Summary length in characters.')
        budget.add_argument('--budget-sentences', type=int, help='Summary length in sentences.')
        budget.add_argument('--layers', type=int, help='Sentences per reading layer.')

    def budget(self, options: dict) -> Tuple[str, int]:
        """Returns the one budget option in use and its value.

        Budget flags replace every configured budget.
        """

        chosen = {name: options[name] for name in BUDGET_OPTIONS if options.get(name) is not None}
        if not chosen:
            chosen = {
                name: self.sentrank_options[name.upper()]
                for name in BUDGET_OPTIONS
                if self.sentrank_options.get(name.upper()) is not None
            }

        if len(chosen) != 1:
            names = ', '.join('--' + name.replace('_', '-') for name in BUDGET_OPTIONS)
            raise ConfigurationError(f'Exactly one budget is needed, one of {names}; got {len(chosen)}.')
        return next(iter(chosen.items()))

    def run(self, *args, **options):
        config = self.build_config(options)
        name, budget = self.budget(options)
        ranker = self.build_ranker(options, config)
        result = ranker.rank_text(read_text(options['input']))
        document = result.document

        if name == LAYERS:
            layers = reading_layers(result.ranked, budget)
            self.stdout.write('\n\n'.join(
                '\n'.join(document.sentence(index).raw for index in layer) for layer in layers
            ))
            return

        unit = BudgetUnit(name[len('budget_'):])
        cut = cut_budget(result.ranked, document, budget, unit)
        if cut.over_budget:
            self.stderr.write(f'The top sentence alone exceeds the budget of {budget} {unit.value}.')

        for index in cut.indexes:
            self.stdout.write(document.sentence(index).raw)
