# asymptotic_series/serializers.py
from rest_framework import serializers

from analytic_core.serializers import PrecisionQuerySerializer

from .series import SERIES_KINDS


class HarmonicQuerySerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=0, max_value=100_000)


class GammaTableQuerySerializer(PrecisionQuerySerializer):
    n = serializers.CharField(default='1,2,4,8,16,32,64,128', help_text="comma-separated positive integers")

    def validate_n(self, value):
        try:
            counts = [int(part) for part in value.split(',')]
        except ValueError:
            raise serializers.ValidationError("n must be a comma-separated list of integers")
        if not counts or min(counts) < 1 or max(counts) > 100_000:
            raise serializers.ValidationError("every n must lie in 1..100000")
        return counts


class ExpansionQuerySerializer(PrecisionQuerySerializer):
    n = serializers.IntegerField(min_value=1, max_value=100_000)
    m = serializers.IntegerField(min_value=1, max_value=30)


class SeriesQuerySerializer(PrecisionQuerySerializer):
    kind = serializers.ChoiceField(choices=SERIES_KINDS)
    p = serializers.IntegerField(min_value=1, max_value=64)
    tol = serializers.CharField(required=False)

    def validate_tol(self, value):
        try:
            tol = float(value)
        except ValueError:
            raise serializers.ValidationError("tol must be a number")
        if not tol > 0:
            raise serializers.ValidationError("tol must be positive")
        return value


class SeriesCheckQuerySerializer(PrecisionQuerySerializer):
    check = serializers.ChoiceField(choices=['pr82', 'pr83', 'lm84', 'leading'])
    p = serializers.IntegerField(min_value=1, max_value=64)
    m = serializers.IntegerField(min_value=1, max_value=6, default=2)
