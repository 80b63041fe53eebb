from rest_framework import serializers
from rest_framework.renderers import JSONRenderer


class DivisibilityMatchingSerializer(serializers.Serializer):
    """Сопоставление по делимости: пары степеней или нарушитель условия Холла"""
    perfect = serializers.BooleanField()
    pairs = serializers.SerializerMethodField()
    violator = serializers.SerializerMethodField()

    def get_pairs(self, obj):
        return [list(pair) for pair in obj.degree_pairs()] if obj.perfect else []

    def get_violator(self, obj):
        if obj.violator is None:
            return None
        return obj.violator.as_dict(obj.left, obj.right)


class BlockRecordSerializer(serializers.Serializer):
    """Запись по блоку: степени, дефект, соответствие Брауэра и результаты сопоставлений"""
    id = serializers.CharField()
    degrees = serializers.ListField(child=serializers.IntegerField())
    defect = serializers.IntegerField()
    defect_group_order = serializers.IntegerField()
    correspondent = serializers.CharField(allow_null=True)
    irr0_left = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    irr0_right = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    irr0_matching = DivisibilityMatchingSerializer(allow_null=True)
    ibr0_left = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    ibr0_right = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    ibr0_matching = DivisibilityMatchingSerializer(allow_null=True)
    dim_B = serializers.IntegerField(allow_null=True)
    dim_b = serializers.IntegerField(allow_null=True)
    dim_divides = serializers.BooleanField(allow_null=True)
    dim_p_part_divides = serializers.BooleanField(allow_null=True)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        return {key: value for key, value in data.items() if value is not None}


class VerificationReportSerializer(serializers.Serializer):
    """Отчёт проверки для пары (G, p)"""
    group = serializers.CharField()
    order = serializers.IntegerField()
    prime = serializers.IntegerField()
    p_solvable = serializers.BooleanField()
    seed = serializers.IntegerField()
    elapsed_ms = serializers.IntegerField(allow_null=True)
    hypothesis = serializers.CharField(allow_null=True)
    verdict = serializers.CharField()
    verdicts = serializers.DictField(child=serializers.CharField())
    blocks = BlockRecordSerializer(many=True)
    propositions = serializers.DictField(child=serializers.ListField())

    def to_representation(self, instance):
        data = super().to_representation(instance)
        for key in ('elapsed_ms', 'hypothesis'):
            if data.get(key) is None:
                data.pop(key, None)
        return data


def render_json(report):
    """JSON-текст отчёта с отступами."""
    data = VerificationReportSerializer(report).data
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8') + '\n'
