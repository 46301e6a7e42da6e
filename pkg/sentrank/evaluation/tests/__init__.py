"""Evaluation app tests."""
