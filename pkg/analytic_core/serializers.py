# analytic_core/serializers.py
from django.conf import settings
from rest_framework import serializers


class PrecisionQuerySerializer(serializers.Serializer):
    prec = serializers.IntegerField(min_value=64, required=False)
    digits = serializers.IntegerField(min_value=5, max_value=200, default=30)

    def validate_prec(self, value):
        if value > settings.BERNOULLI['MAX_PREC']:
            raise serializers.ValidationError(f"prec must not exceed {settings.BERNOULLI['MAX_PREC']}")
        return value


class NormQuerySerializer(PrecisionQuerySerializer):
    n = serializers.IntegerField(min_value=1, max_value=60)


class PeriodicQuerySerializer(PrecisionQuerySerializer):
    n = serializers.IntegerField(min_value=0, max_value=60)
    x = serializers.CharField()


class DilcherQuerySerializer(PrecisionQuerySerializer):
    n = serializers.IntegerField(min_value=2, max_value=200)
    re = serializers.FloatField(default=0.0)
    im = serializers.FloatField(default=0.0)


class ConvergenceQuerySerializer(PrecisionQuerySerializer):
    n = serializers.IntegerField(min_value=1, max_value=30)
    grid = serializers.IntegerField(min_value=10, max_value=20000, default=1000)
