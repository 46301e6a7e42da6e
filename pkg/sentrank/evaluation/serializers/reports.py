"""Evaluation report serializers."""

# Django REST Framework
from rest_framework import serializers


class RougeResultSerializer(serializers.Serializer):
    """ROUGE recalls of one document or of a corpus mean."""

    r1 = serializers.FloatField(read_only=True)
    r2 = serializers.FloatField(read_only=True)
    rsu4 = serializers.FloatField(read_only=True)


class VariantReportSerializer(serializers.Serializer):
    """Corpus mean recalls of a variant, followed by the per document ones."""

    r1 = serializers.FloatField(source='mean.r1', read_only=True)
    r2 = serializers.FloatField(source='mean.r2', read_only=True)
    rsu4 = serializers.FloatField(source='mean.rsu4', read_only=True)
    documents = serializers.SerializerMethodField()

    def get_documents(self, report) -> list:
        return [
            {'id': doc_id, **RougeResultSerializer(result).data}
            for doc_id, result in report.documents
        ]
