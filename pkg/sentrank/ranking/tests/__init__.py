"""Ranking app tests."""
