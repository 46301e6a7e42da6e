"""Ranking app scores, clusters and orders the sentences of a document."""
