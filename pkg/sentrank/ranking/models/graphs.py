"""Semantic graph models."""

# Utilities
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Hashable, Iterator, List, Sequence, Tuple

import numpy as np

# Exceptions
from sentrank.utils.exceptions import ConfigurationError


class GraphKind(str, Enum):
    """Semantic word, phrase-word and sentence graphs."""

    SWG = 'SWG'
    SPG = 'SPG'
    SSG = 'SSG'


@dataclass(frozen=True)
class GraphConfig:
    """Windows, thresholds and ablation switches of graph construction."""

    window_swg: int = 2
    window_spg: int = 3
    delta_swg: float = 0.65
    delta_spg: float = 0.6
    gamma_pct: float = 30.0
    ablate_semantic_edges: bool = False

    def __post_init__(self) -> None:
        if self.window_swg < 2 or self.window_spg < 2:
            raise ConfigurationError('Sliding windows must span at least 2 units.')
        for name in ('delta_swg', 'delta_spg'):
            if not 0.0 < getattr(self, name) < 1.0:
                raise ConfigurationError(f'{name} must lie in (0, 1).')
        if not 0.0 < self.gamma_pct <= 100.0:
            raise ConfigurationError('gamma_pct must lie in (0, 100].')


@dataclass(frozen=True)
class Edge:
    """Weights of an undirected edge.

    w_c and w_s are the normalized co-occurrence and semantic weights,
    w their sum.
    """

    w_c: float = 0.0
    w_s: float = 0.0

    @property
    def w(self) -> float:
        return self.w_c + self.w_s


class SemanticGraph:
    """Weighted undirected graph with a co-occurrence and a semantic channel.

    Edges are stored once, under the pair ordered by node position.
    """

    def __init__(self, kind: GraphKind, nodes: Sequence[Hashable], edges: Dict[Tuple, Edge]) -> None:
        self.kind = kind
        self.nodes: Tuple = tuple(nodes)
        self.positions = {node: position for position, node in enumerate(self.nodes)}

        self.edges: Dict[Tuple, Edge] = {}
        for (u, v), edge in edges.items():
            if u == v:
                raise ValueError(f'Self loop on {u!r}.')
            self.edges[self._pair(u, v)] = edge

    def __len__(self) -> int:
        return len(self.nodes)

    def _pair(self, u: Hashable, v: Hashable) -> Tuple:
        return (u, v) if self.positions[u] < self.positions[v] else (v, u)

    def edge(self, u: Hashable, v: Hashable) -> Edge:
        """Returns the edge between two nodes, an empty edge when there is none."""

        return self.edges.get(self._pair(u, v), Edge())

    def weight(self, u: Hashable, v: Hashable) -> float:
        return self.edge(u, v).w

    def neighbors(self, node: Hashable) -> Iterator[Hashable]:
        for u, v in self.edges:
            if u == node:
                yield v
            elif v == node:
                yield u

    def channel_sums(self) -> Tuple[float, float]:
        """Returns the total co-occurrence and semantic weights."""

        return (
            sum(edge.w_c for edge in self.edges.values()),
            sum(edge.w_s for edge in self.edges.values()),
        )

    def adjacency(self) -> np.ndarray:
        """Returns the symmetric matrix of combined weights, rows in node order."""

        matrix = np.zeros((len(self.nodes), len(self.nodes)))
        for (u, v), edge in self.edges.items():
            i, j = self.positions[u], self.positions[v]
            matrix[i, j] = matrix[j, i] = edge.w
        return matrix

    def dump(self) -> List[str]:
        """Returns the edge list as ``u<TAB>v<TAB>w_c<TAB>w_s<TAB>w`` lines, sorted."""

        lines = []
        for u, v in self.edges:
            first, second = sorted((str(u), str(v)))
            edge = self.edges[(u, v)]
            lines.append(f'{first}\t{second}\t{edge.w_c!r}\t{edge.w_s!r}\t{edge.w!r}')
        return sorted(lines)
