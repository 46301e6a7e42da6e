"""Management command helpers."""

# Django
from django.core.management.base import BaseCommand, CommandError

# Django REST Framework
from rest_framework.exceptions import ValidationError

# Utilities
import logging

# Models
from sentrank.documents.models import load_vectors
from sentrank.ranking.models import Ablation, Clusterer, Method, PipelineConfig, Structure

# Preprocessing
from sentrank.documents.preprocessing import PhraseLexicon, TextAnalyzer

# Engine
from sentrank.ranking.engine.pipeline import SentenceRanker

# Serializers
from sentrank.ranking.serializers import PipelineConfigSerializer

# Configuration
from sentrank.utils.config import load_options

# Exceptions
from sentrank.utils.exceptions import ConfigurationError, SentrankError, format_errors

logger = logging.getLogger(__name__)

# Command option -> serializer field.
PIPELINE_FLAGS = {
    'method': 'method',
    'structure': 'structure',
    'window_swg': 'window_swg',
    'window_spg': 'window_spg',
    'delta_swg': 'delta_swg',
    'delta_spg': 'delta_spg',
    'gamma_pct': 'gamma_pct',
    'damping_factor': 'd',
    'tol': 'tol',
    'max_iter': 'max_iter',
    'rbf_gamma': 'gamma',
    'cluster_cap': 'cluster_cap',
    'wmd_cap': 'wmd_cap',
    'clusterer': 'clusterer',
    'ap_damping': 'ap_damping',
    'ap_max_iter': 'ap_max_iter',
    'ap_stable_iters': 'ap_stable_iters',
    'ablate': 'ablate',
}


class SentrankCommand(BaseCommand):
    """Base command turning sentrank, validation and file errors into CommandError.

    Subclasses implement run() instead of handle().
    """

    def handle(self, *args, **options):
        try:
            return self.run(*args, **options)
        except ValidationError as error:
            raise CommandError(format_errors(error.detail))
        except SentrankError as error:
            raise CommandError(str(error))
        except OSError as error:
            raise CommandError(f'{error.filename or ""}: {error.strerror or error}')

    def run(self, *args, **options):
        raise NotImplementedError('subclasses of SentrankCommand must provide a run() method')


class PipelineCommandMixin:
    """Adds the pipeline flags and builds a SentenceRanker from them.

    Every flag has a SENTRANK_* configuration key; a flag that is given
    wins over its key.
    """

    def add_pipeline_arguments(self, parser) -> None:
        parser.add_argument('--embeddings', help='Text vector file.')
        parser.add_argument('--phrases', help='Phrase lexicon, one underscore joined phrase per line.')
        parser.add_argument('--config', help='KEY=value file with SENTRANK_* settings.')
        parser.add_argument('--language', help='Stemmer language, "english" or "none".')

        parser.add_argument('--method', choices=[method.value for method in Method])
        parser.add_argument('--structure', choices=[structure.value for structure in Structure])
        parser.add_argument('--clusterer', choices=[clusterer.value for clusterer in Clusterer])
        parser.add_argument(
            '--ablate',
            help='Comma separated features to switch off: ' + ', '.join(flag.value for flag in Ablation),
        )

        parser.add_argument('--window-swg', type=int)
        parser.add_argument('--window-spg', type=int)
        parser.add_argument('--delta-swg', type=float)
        parser.add_argument('--delta-spg', type=float)
        parser.add_argument('--gamma-pct', type=float)
        parser.add_argument('--damping-factor', type=float)
        parser.add_argument('--tol', type=float)
        parser.add_argument('--max-iter', type=int)
        parser.add_argument('--rbf-gamma', type=float)
        parser.add_argument('--cluster-cap', type=int)
        parser.add_argument('--wmd-cap', type=int)
        parser.add_argument('--ap-damping', type=float)
        parser.add_argument('--ap-max-iter', type=int)
        parser.add_argument('--ap-stable-iters', type=int)

    def build_config(self, options: dict) -> PipelineConfig:
        """Merges flags over the configured options and validates them.

        Raises ValidationError naming the offending fields.
        """

        self.sentrank_options = load_options(options.get('config'))
        overrides = {field: options.get(flag) for flag, field in PIPELINE_FLAGS.items()}

        serializer = PipelineConfigSerializer.from_options(self.sentrank_options, **overrides)
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    def option(self, options: dict, name: str):
        """Returns a flag value, or the configured one when the flag was not given.

        Unset switches arrive as False and fall back too. build_config()
        must run first.
        """

        value = options.get(name)
        if value is None or value is False:
            return self.sentrank_options.get(name.upper(), value)
        return value

    def build_ranker(self, options: dict, config: PipelineConfig) -> SentenceRanker:
        """Loads the embeddings, the lexicon and the analyzer named by the options."""

        path = self.option(options, 'embeddings')
        if not path:
            raise ConfigurationError('No vector file: pass --embeddings or set SENTRANK_EMBEDDINGS.')

        embeddings = load_vectors(path)
        logger.info('Loaded %d vectors of dimension %d.', len(embeddings), embeddings.dim)

        phrases = self.option(options, 'phrases')
        lexicon = PhraseLexicon.load(phrases) if phrases else PhraseLexicon()
        analyzer = TextAnalyzer.from_settings(self.option(options, 'language'), self.sentrank_options)

        return SentenceRanker(embeddings, config, lexicon, analyzer)
