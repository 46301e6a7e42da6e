"""Ranking output serializers."""

# Django REST Framework
from rest_framework import serializers


class RankingSerializer(serializers.Serializer):
    """Represents a RankingResult as the ranking document printed by the commands.

    The ranking lists sentences by rank, rank 1 first.
    """

    id = serializers.CharField(source='document.id', allow_null=True)
    method = serializers.CharField()
    ranking = serializers.SerializerMethodField()

    def get_ranking(self, result) -> list:
        ranked = result.ranked
        f_s = result.salience.f_s

        return [
            {
                'index': index,
                'rank': rank,
                'f_s': f_s.get(index, 0.0),
                'unit_score': ranked.unit_scores[index],
                'cluster': ranked.cluster[index],
                'round': ranked.round[index],
            }
            for rank, index in enumerate(ranked.order, start=1)
        ]
