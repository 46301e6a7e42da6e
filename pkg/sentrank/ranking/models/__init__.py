"""Ranking app models."""
from .bags import SentenceBag
from .graphs import GraphKind, GraphConfig, Edge, SemanticGraph
from .scores import (
    Structure,
    LocationScorer,
    BiasVector,
    ScoreTable,
    ScoringMode,
    SalienceTable,
)
from .clusters import ClusterAssignment, APState
from .outputs import RankedOutput, BudgetUnit, BudgetCut, RankingResult
from .pipelines import Method, Ablation, Clusterer, PipelineConfig
