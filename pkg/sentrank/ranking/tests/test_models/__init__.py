"""Ranking models tests."""
