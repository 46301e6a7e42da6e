"""Sentrank ranks the sentences of a document by their relative importance."""

__version__ = "0.1.0"
