"""Evaluation corpus serializers."""

# Django REST Framework
from rest_framework import serializers

# Models
from sentrank.evaluation.models import EvalDocument

# Exceptions
from sentrank.utils.exceptions import DataError


class EvalDocumentSerializer(serializers.Serializer):
    """Validates one line of a JSON Lines corpus.

    A document needs abstractive references, judge scores or both, and
    every judge must score every sentence.
    """

    id = serializers.CharField()
    sentences = serializers.ListField(child=serializers.CharField(trim_whitespace=False), allow_empty=False)
    references = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    judge_scores = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField()),
        required=False,
        default=list,
    )

    def validate(self, data):
        """Checks references and judge scores against the sentences."""

        if not data['references'] and not data['judge_scores']:
            raise serializers.ValidationError('Either references or judge_scores must be given.')

        n = len(data['sentences'])
        for judge, scores in enumerate(data['judge_scores'], start=1):
            if len(scores) != n:
                raise serializers.ValidationError(
                    {'judge_scores': f'judge {judge} scores {len(scores)} sentences, expected {n}.'}
                )

        return data

    def create(self, data) -> EvalDocument:
        try:
            return EvalDocument(
                id=data['id'],
                sentences=tuple(data['sentences']),
                references=tuple(data['references']),
                judge_scores=tuple(tuple(scores) for scores in data['judge_scores']),
            )
        except DataError as error:
            raise serializers.ValidationError(str(error))
