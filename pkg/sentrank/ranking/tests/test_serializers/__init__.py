"""Ranking serializers tests."""
