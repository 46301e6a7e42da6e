"""Evaluation engine: ROUGE metrics and the judge ranking protocol."""
