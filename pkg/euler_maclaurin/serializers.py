# euler_maclaurin/serializers.py
from rest_framework import serializers

from analytic_core.serializers import PrecisionQuerySerializer

from .integrands import MAX_ORDER


class IntegrandQuerySerializer(PrecisionQuerySerializer):
    f = serializers.CharField(max_length=200, help_text="exp, reciprocal1p, cos2pi, log1p or poly:<coeffs>")


class CompositeMeanQuerySerializer(IntegrandQuerySerializer):
    p = serializers.IntegerField(min_value=1, max_value=100_000)
    x = serializers.CharField(default='0')


class IdentityQuerySerializer(CompositeMeanQuerySerializer):
    p = serializers.IntegerField(min_value=1, max_value=4096)
    m = serializers.IntegerField(min_value=1, max_value=MAX_ORDER)


class DecayQuerySerializer(IntegrandQuerySerializer):
    m = serializers.IntegerField(min_value=1, max_value=MAX_ORDER)
    x = serializers.CharField(default='0')
    p = serializers.CharField(default='4,8,16,32,64', help_text="comma-separated increasing panel counts")

    def validate_p(self, value):
        try:
            counts = [int(part) for part in value.split(',')]
        except ValueError:
            raise serializers.ValidationError("p must be a comma-separated list of integers")
        if len(counts) < 2 or any(b <= a for a, b in zip(counts, counts[1:])) or counts[0] < 1:
            raise serializers.ValidationError("p must hold at least two increasing positive counts")
        if counts[-1] > 4096:
            raise serializers.ValidationError("p must not exceed 4096")
        return counts


class SignedRemainderQuerySerializer(IntegrandQuerySerializer):
    m = serializers.IntegerField(min_value=1, max_value=MAX_ORDER // 2)
