"""Ranking commands tests."""
