"""Pipeline configuration serializers."""

# Django REST Framework
from rest_framework import serializers

# Models
from sentrank.ranking.models import (
    Ablation,
    Clusterer,
    GraphConfig,
    Method,
    PipelineConfig,
    Structure,
)

# Exceptions
from sentrank.utils.exceptions import ConfigurationError

# SENTRANK settings key -> serializer field.
OPTION_FIELDS = {
    'METHOD': 'method',
    'STRUCTURE': 'structure',
    'WINDOW_SWG': 'window_swg',
    'WINDOW_SPG': 'window_spg',
    'DELTA_SWG': 'delta_swg',
    'DELTA_SPG': 'delta_spg',
    'GAMMA_PCT': 'gamma_pct',
    'DAMPING_FACTOR': 'd',
    'TOL': 'tol',
    'MAX_ITER': 'max_iter',
    'RBF_GAMMA': 'gamma',
    'CLUSTER_CAP': 'cluster_cap',
    'WMD_CAP': 'wmd_cap',
    'CLUSTERER': 'clusterer',
    'AP_DAMPING': 'ap_damping',
    'AP_MAX_ITER': 'ap_max_iter',
    'AP_STABLE_ITERS': 'ap_stable_iters',
    'ABLATE': 'ablate',
}

GRAPH_FIELDS = ('window_swg', 'window_spg', 'delta_swg', 'delta_spg', 'gamma_pct')


class AblationField(serializers.Field):
    """Ablation flags, given as a comma separated string or a list."""

    default_error_messages = {
        'invalid': 'Unknown ablation flag "{flag}". Expected one of: nse, nas, nsc, nsp.',
    }

    def to_internal_value(self, data):
        if data is None:
            return frozenset()
        if isinstance(data, str):
            data = data.split(',')

        flags = set()
        for flag in data:
            flag = str(flag).strip().lower()
            if not flag:
                continue
            try:
                flags.add(Ablation(flag))
            except ValueError:
                self.fail('invalid', flag=flag)
        return frozenset(flags)

    def to_representation(self, value):
        return sorted(flag.value for flag in value)


class PipelineConfigSerializer(serializers.Serializer):
    """Validates pipeline options and builds the PipelineConfig they describe."""

    method = serializers.ChoiceField(choices=[method.value for method in Method], default=Method.SSR.value)
    structure = serializers.ChoiceField(
        choices=[structure.value for structure in Structure],
        default=Structure.INVERTED_PYRAMID.value,
    )

    window_swg = serializers.IntegerField(min_value=2, default=2)
    window_spg = serializers.IntegerField(min_value=2, default=3)
    delta_swg = serializers.FloatField(default=0.65)
    delta_spg = serializers.FloatField(default=0.6)
    gamma_pct = serializers.FloatField(default=30.0)

    d = serializers.FloatField(default=0.85)
    tol = serializers.FloatField(min_value=0.0, default=1e-8)
    max_iter = serializers.IntegerField(min_value=1, default=100)

    gamma = serializers.FloatField(default=1.0)
    cluster_cap = serializers.IntegerField(min_value=1, default=8)
    wmd_cap = serializers.IntegerField(min_value=1, default=30)
    clusterer = serializers.ChoiceField(
        choices=[clusterer.value for clusterer in Clusterer],
        allow_blank=True,
        allow_null=True,
        default='',
    )
    ap_damping = serializers.FloatField(min_value=0.0, max_value=0.999999, default=0.5)
    ap_max_iter = serializers.IntegerField(min_value=1, default=200)
    ap_stable_iters = serializers.IntegerField(min_value=1, default=15)

    ablate = AblationField(default=frozenset())

    @classmethod
    def from_options(cls, options: dict, **overrides) -> 'PipelineConfigSerializer':
        """Returns a serializer over SENTRANK options, overrides taking precedence."""

        data = {field: options[key] for key, field in OPTION_FIELDS.items() if key in options}
        data.update({field: value for field, value in overrides.items() if value is not None})
        return cls(data=data)

    def validate(self, data):
        """Checks the invariants that span several fields."""

        try:
            graph = GraphConfig(**{field: data[field] for field in GRAPH_FIELDS})
            self.context['pipeline'] = PipelineConfig(
                method=Method(data['method']),
                structure=Structure(data['structure']),
                graph=graph,
                d=data['d'],
                tol=data['tol'],
                max_iter=data['max_iter'],
                gamma=data['gamma'],
                cluster_cap=data['cluster_cap'],
                wmd_cap=data['wmd_cap'],
                clusterer=Clusterer(data['clusterer']) if data.get('clusterer') else None,
                ap_damping=data['ap_damping'],
                ap_max_iter=data['ap_max_iter'],
                ap_stable_iters=data['ap_stable_iters'],
                ablations=data['ablate'],
            )
        except ConfigurationError as error:
            raise serializers.ValidationError(str(error))

        return data

    def create(self, data) -> PipelineConfig:
        """Returns the validated configuration."""

        return self.context['pipeline']
