"""Evaluation commands tests."""
