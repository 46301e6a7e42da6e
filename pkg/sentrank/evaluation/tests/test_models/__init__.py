"""Evaluation models tests."""
