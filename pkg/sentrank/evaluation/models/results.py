"""Evaluation result models."""

# Utilities
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class RougeResult:
    """ROUGE-1, ROUGE-2 and ROUGE-SU4 recalls."""

    r1: float = 0.0
    r2: float = 0.0
    rsu4: float = 0.0

    def __post_init__(self) -> None:
        for name in ('r1', 'r2', 'rsu4'):
            if not 0.0 <= getattr(self, name) <= 1.0 + 1e-12:
                raise ValueError(f'{name} must lie in [0, 1].')

    @classmethod
    def mean(cls, results: Sequence['RougeResult']) -> 'RougeResult':
        if not results:
            return cls()

        count = len(results)
        return cls(
            r1=sum(result.r1 for result in results) / count,
            r2=sum(result.r2 for result in results) / count,
            rsu4=sum(result.rsu4 for result in results) / count,
        )


@dataclass
class VariantReport:
    """Per document and corpus mean results of one ranking variant."""

    name: str
    documents: List[Tuple[str, RougeResult]] = field(default_factory=list)

    @property
    def mean(self) -> RougeResult:
        return RougeResult.mean([result for _, result in self.documents])
