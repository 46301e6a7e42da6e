"""Ranking engine.

Distances, graph construction, centrality, scoring, clustering and
selection, wired together by the SentenceRanker pipeline.
"""
