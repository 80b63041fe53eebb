from rest_framework import serializers

from .models import VerificationRun


class VerificationRunSerializer(serializers.ModelSerializer):
    """Сериализатор записи журнала прогонов"""
    kind_display = serializers.CharField(source='get_kind_display', read_only=True)

    class Meta:
        model = VerificationRun
        fields = [
            'id', 'group', 'order', 'prime', 'kind', 'kind_display',
            'verdict', 'expected', 'matched', 'seed', 'elapsed_ms',
            'created_at',
        ]


class VerificationRunDetailSerializer(VerificationRunSerializer):
    """Запись журнала вместе с сохранённым отчётом"""

    class Meta(VerificationRunSerializer.Meta):
        fields = VerificationRunSerializer.Meta.fields + ['report']
