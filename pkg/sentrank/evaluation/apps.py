"""Evaluation app configuration."""

# Django
from django.apps import AppConfig


class EvaluationAppConfig(AppConfig):
    """Evaluation app class configuration.

    Contains the ROUGE metrics, the judge ranking protocol, the ablation
    harness and the evaluate command.
    """

    name = 'sentrank.evaluation'
    verbose_name = 'Evaluation'
