"""Pipeline configuration model."""

# Utilities
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Optional

# Models
from .graphs import GraphConfig
from .scores import Structure, ScoringMode

# Exceptions
from sentrank.utils.exceptions import ConfigurationError


class Method(str, Enum):
    """Ranking methods, from the full model to its word-only sub model."""

    SSR = 'ssr'
    SPR = 'spr'
    SWR = 'swr'

    @property
    def mode(self) -> ScoringMode:
        return ScoringMode(self.value.upper())


class Ablation(str, Enum):
    """Features a run can switch off.

    NSE drops semantic edges, NAS the article structure bias, NSC the
    subtopic clustering and NSP the Softplus elevation.
    """

    NSE = 'nse'
    NAS = 'nas'
    NSC = 'nsc'
    NSP = 'nsp'


class Clusterer(str, Enum):
    SPECTRAL = 'spectral'
    AFFINITY_PROPAGATION = 'affinity_propagation'


@dataclass(frozen=True)
class PipelineConfig:
    """Every knob of a ranking run. Defaults follow the reference setup."""

    method: Method = Method.SSR
    structure: Structure = Structure.INVERTED_PYRAMID
    graph: GraphConfig = field(default_factory=GraphConfig)
    d: float = 0.85
    tol: float = 1e-8
    max_iter: int = 100
    gamma: float = 1.0
    cluster_cap: int = 8
    wmd_cap: int = 30
    clusterer: Optional[Clusterer] = None
    ap_damping: float = 0.5
    ap_max_iter: int = 200
    ap_stable_iters: int = 15
    ablations: FrozenSet[Ablation] = frozenset()

    def __post_init__(self) -> None:
        if not 0.0 < self.d < 1.0:
            raise ConfigurationError('The damping factor d must lie in (0, 1).')
        if self.gamma <= 0:
            raise ConfigurationError('The RBF gamma must be positive.')
        if self.cluster_cap < 1 or self.wmd_cap < 1:
            raise ConfigurationError('cluster_cap and wmd_cap must be positive.')
        if self.graph.ablate_semantic_edges != (Ablation.NSE in self.ablations):
            object.__setattr__(
                self,
                'graph',
                GraphConfig(**{**self.graph.__dict__, 'ablate_semantic_edges': Ablation.NSE in self.ablations}),
            )

    @property
    def mode(self) -> ScoringMode:
        return self.method.mode

    @property
    def elevate(self) -> bool:
        return Ablation.NSP not in self.ablations

    @property
    def biased_structure(self) -> Structure:
        """Returns the structure to bias with, uniform under the NAS ablation."""

        if Ablation.NAS in self.ablations:
            return Structure.UNIFORM
        return self.structure

    @property
    def effective_clusterer(self) -> Clusterer:
        """Returns the clusterer, affinity propagation for SSR and spectral otherwise by default."""

        if self.clusterer is not None:
            return self.clusterer
        if self.method is Method.SSR:
            return Clusterer.AFFINITY_PROPAGATION
        return Clusterer.SPECTRAL

    def with_ablations(self, ablations) -> 'PipelineConfig':
        """Returns a copy of the configuration running with other ablations."""

        values = {**self.__dict__, 'ablations': frozenset(ablations)}
        values['graph'] = GraphConfig(
            **{**self.graph.__dict__, 'ablate_semantic_edges': Ablation.NSE in values['ablations']}
        )
        return PipelineConfig(**values)
