# quadrature/serializers.py
from fractions import Fraction

from rest_framework import serializers

from core.exceptions import InvalidArgument
from euler_maclaurin.integrands import MAX_ORDER
from euler_maclaurin.serializers import IntegrandQuerySerializer
from exact_core.serializers import RationalField

from .rules import RuleId


class RuleField(serializers.CharField):
    """'midpoint', 'gauss2', 'romberg:2', ... as a RuleId."""

    def to_internal_value(self, data):
        text = super().to_internal_value(data)
        try:
            return RuleId.parse(text)
        except InvalidArgument as exc:
            raise serializers.ValidationError(exc.detail)


def _panel_counts(value: str, minimum: int, doubling: bool = False) -> list[int]:
    try:
        counts = [int(part) for part in value.split(',')]
    except ValueError:
        raise serializers.ValidationError("p must be a comma-separated list of integers")
    if len(counts) < minimum or counts[0] < 1 or any(b <= a for a, b in zip(counts, counts[1:])):
        raise serializers.ValidationError(f"p must hold at least {minimum} increasing positive counts")
    if doubling and any(b != 2 * a for a, b in zip(counts, counts[1:])):
        raise serializers.ValidationError("each panel count must double the previous one")
    if counts[-1] > 4096:
        raise serializers.ValidationError("p must not exceed 4096")
    return counts


class ApplyRuleQuerySerializer(IntegrandQuerySerializer):
    rule = RuleField()
    p = serializers.IntegerField(min_value=1, max_value=4096)


class ExpansionQuerySerializer(IntegrandQuerySerializer):
    rule = RuleField()
    m = serializers.IntegerField(min_value=1, max_value=MAX_ORDER)


class OrderLimitQuerySerializer(IntegrandQuerySerializer):
    rule = RuleField()
    p = serializers.CharField(default='8,16,32')

    def validate_p(self, value):
        return _panel_counts(value, 3, doubling=True)


class ConvergenceQuerySerializer(IntegrandQuerySerializer):
    rule = RuleField()
    p = serializers.CharField(default='1,2,4,8,16,32')

    def validate_p(self, value):
        return _panel_counts(value, 1)


class RombergQuerySerializer(IntegrandQuerySerializer):
    p = serializers.IntegerField(min_value=1, max_value=256)
    level = serializers.IntegerField(min_value=0, max_value=6)
    m = serializers.IntegerField(min_value=2, max_value=MAX_ORDER)

    def validate(self, attrs):
        if attrs['m'] < 2 * attrs['level'] + 2:
            raise serializers.ValidationError("m must be at least 2 level + 2")
        return attrs


class QBinomialQuerySerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=0, max_value=200)
    m = serializers.IntegerField(min_value=0, max_value=200)
    q = RationalField(default=Fraction(1, 4))

    def validate(self, attrs):
        if attrs['m'] > attrs['n']:
            raise serializers.ValidationError("m must not exceed n")
        return attrs


class MonotoneRemainderQuerySerializer(IntegrandQuerySerializer):
    p = serializers.IntegerField(min_value=1, max_value=1024)
    m = serializers.IntegerField(min_value=1, max_value=MAX_ORDER // 2)
