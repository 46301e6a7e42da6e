"""Preprocessing tests."""
