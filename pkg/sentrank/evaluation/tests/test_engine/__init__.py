"""Evaluation engine tests."""
