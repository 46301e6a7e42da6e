"""Rank command."""

# Django REST Framework
from rest_framework.renderers import JSONRenderer

# Utilities
import os

# Serializers
from sentrank.ranking.serializers import RankingSerializer

# Commands
from sentrank.utils.commands import PipelineCommandMixin, SentrankCommand


def read_text(path: str) -> str:
    with open(path, encoding='utf-8') as text_file:
        return text_file.read()


class Command(PipelineCommandMixin, SentrankCommand):
    """Ranks every sentence of a document and prints the ranking as JSON."""

    help = 'Ranks the sentences of a UTF-8 text document.'

    def add_arguments(self, parser):
        parser.add_argument('input', help='UTF-8 text document, paragraphs separated by blank lines.')
        self.add_pipeline_arguments(parser)
        parser.add_argument('--dump-dir', help='Directory receiving graph, score and cluster dumps.')

    def dump(self, result, directory: str) -> None:
        """Writes the debug dumps of a ranking run."""

        os.makedirs(directory, exist_ok=True)

        def write(name, lines):
            with open(os.path.join(directory, name), 'w', encoding='utf-8') as dump_file:
                dump_file.writelines(f'{line}\n' for line in lines)

        for kind, graph in result.graphs.items():
            write(f'{kind.lower()}.edges.tsv', graph.dump())
        for kind, scores in result.scores.items():
            write(f'{kind.lower()}.scores.tsv', scores.dump())
        write('clusters.tsv', result.clusters.dump())

    def run(self, *args, **options):
        config = self.build_config(options)
        ranker = self.build_ranker(options, config)

        doc_id = os.path.splitext(os.path.basename(options['input']))[0]
        result = ranker.rank_text(read_text(options['input']), doc_id=doc_id)

        dump_dir = self.option(options, 'dump_dir')
        if dump_dir:
            self.dump(result, dump_dir)

        self.stdout.write(JSONRenderer().render(RankingSerializer(result).data).decode('utf-8'))
