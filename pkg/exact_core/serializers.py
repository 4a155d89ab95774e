# exact_core/serializers.py
from rest_framework import serializers

from .polynomial import parse_rational


class IndexQuerySerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=0, max_value=500)


class RangeQuerySerializer(serializers.Serializer):
    start = serializers.IntegerField(min_value=0, default=0)
    end = serializers.IntegerField(min_value=0, max_value=500)

    def validate(self, attrs):
        if attrs['start'] > attrs['end']:
            raise serializers.ValidationError("start must not exceed end")
        return attrs


class RationalField(serializers.CharField):
    """Accepts "num/den" (or an integer) and yields a Fraction."""

    def to_internal_value(self, data):
        text = super().to_internal_value(data)
        try:
            return parse_rational(text)
        except ValueError as exc:
            raise serializers.ValidationError(str(exc))


class EvaluateQuerySerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=0, max_value=500)
    x = RationalField()


class PowerSumQuerySerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=0, max_value=200)
    m = serializers.IntegerField(min_value=1, required=False)


class VonStaudtQuerySerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1, max_value=250)
