"""Ranking engine tests."""
