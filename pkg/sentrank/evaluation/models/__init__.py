"""Evaluation app models."""
from .corpus import EvalDocument
from .results import RougeResult, VariantReport
