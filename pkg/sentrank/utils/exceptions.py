"""Sentrank exceptions.

Every error raised on purpose by the project inherits from SentrankError,
so the commands can turn them into a clean exit.
"""


class SentrankError(Exception):
    """Base class of every sentrank error."""


class EmbeddingLoadError(SentrankError):
    """A vector file could not be parsed."""

    def __init__(self, message: str, line_number: int = None) -> None:
        """Keeps the offending line number next to the message."""

        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class MissingEmbeddingError(SentrankError, KeyError):
    """A key has no vector on the embedding table."""

    def __str__(self) -> str:
        return f"no embedding for {self.args[0]!r}"


class UndefinedSimilarityError(SentrankError):
    """Cosine similarity is undefined for a zero vector."""


class DistanceError(SentrankError):
    """A sentence distance was asked for an empty bag."""


class DegenerateGraphError(SentrankError):
    """A graph can not be built over the given document."""


class ConfigurationError(SentrankError):
    """A configuration value or a combination of them is not valid."""


class ParameterError(SentrankError, ValueError):
    """An operation received an argument outside of its domain."""


class ClusteringError(ParameterError):
    """Clustering can not be carried out with the given parameters."""


class DataError(SentrankError):
    """Input data does not follow its schema."""

    def __init__(self, message: str, line_number: int = None) -> None:
        """Keeps the offending line number next to the message."""

        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


def format_errors(errors) -> str:
    """Flattens serializer error details into one message, fields first."""

    if isinstance(errors, dict):
        return '; '.join(f'{field}: {format_errors(detail)}' for field, detail in errors.items())
    if isinstance(errors, list):
        return ' '.join(format_errors(detail) for detail in errors)
    return str(errors)
