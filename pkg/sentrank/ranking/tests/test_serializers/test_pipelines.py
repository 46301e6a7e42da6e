"""Pipeline configuration serializer tests."""

# Django
from django.conf import settings
from django.test import SimpleTestCase

# Models
from sentrank.ranking.models import Ablation, Clusterer, Method, PipelineConfig

# Serializers
from sentrank.ranking.serializers import PipelineConfigSerializer


class PipelineConfigSerializerTest(SimpleTestCase):
    """Option validation."""

    def test_settings_defaults(self):
        """The SENTRANK settings build the default configuration."""

        serializer = PipelineConfigSerializer.from_options(settings.SENTRANK)

        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), PipelineConfig())

    def test_overrides_take_precedence(self):
        """Flags win over options, unset flags are ignored."""

        serializer = PipelineConfigSerializer.from_options(
            {'METHOD': 'ssr', 'WINDOW_SWG': 4}, method='swr', window_swg=None, ablate='nse, NAS'
        )

        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.save()
        self.assertEqual(config.method, Method.SWR)
        self.assertEqual(config.graph.window_swg, 4)
        self.assertEqual(config.ablations, frozenset({Ablation.NSE, Ablation.NAS}))
        self.assertTrue(config.graph.ablate_semantic_edges)

    def test_clusterer(self):
        serializer = PipelineConfigSerializer(data={'clusterer': 'spectral', 'ablate': ['nsc']})

        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save().clusterer, Clusterer.SPECTRAL)

    def test_unknown_ablation_flag(self):
        serializer = PipelineConfigSerializer(data={'ablate': 'nse,xyz'})

        self.assertFalse(serializer.is_valid())
        self.assertIn('ablate', serializer.errors)

    def test_invalid_values(self):
        """Field and cross field errors."""

        for data in ({'method': 'lexrank'}, {'window_spg': 1}, {'d': 1.5}, {'delta_swg': 2.0}):
            with self.subTest(data=data):
                self.assertFalse(PipelineConfigSerializer(data=data).is_valid())
