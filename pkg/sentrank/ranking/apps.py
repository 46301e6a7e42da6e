"""Ranking app configuration."""

# Django
from django.apps import AppConfig


class RankingAppConfig(AppConfig):
    """Ranking app class configuration.

    Contains the graph, centrality, clustering and selection engine
    and the rank and summarize commands.
    """

    name = 'sentrank.ranking'
    verbose_name = 'Ranking'
