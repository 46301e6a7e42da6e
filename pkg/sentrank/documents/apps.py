"""Documents app configuration."""

# Django
from django.apps import AppConfig


class DocumentsAppConfig(AppConfig):
    """Documents app class configuration.

    Holds the text analysis pipeline and the embedding table
    every other app works on.
    """

    name = 'sentrank.documents'
    verbose_name = 'Documents'
