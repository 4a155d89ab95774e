from django.conf import settings
from rest_framework import serializers

from analytic_core.precision import MIN_PREC

from .models import VerificationRun
from .suites import ALL_SUITES, SUITE_NAMES, SuiteOptions


class VerificationRunSerializer(serializers.ModelSerializer):
    suite = serializers.ChoiceField(choices=SUITE_NAMES + (ALL_SUITES,))
    fast = serializers.BooleanField(write_only=True, default=True)
    max_n = serializers.IntegerField(write_only=True, required=False, min_value=1, max_value=200)
    max_p = serializers.IntegerField(write_only=True, required=False, min_value=2, max_value=10000)
    prec = serializers.IntegerField(write_only=True, required=False, min_value=MIN_PREC)

    class Meta:
        model = VerificationRun
        fields = ['id', 'suite', 'fast', 'max_n', 'max_p', 'prec', 'options', 'status', 'checks', 'failures',
                  'report', 'created_at', 'started_at', 'finished_at']
        read_only_fields = ['options', 'status', 'checks', 'failures', 'report', 'created_at', 'started_at',
                            'finished_at']

    def validate_prec(self, value):
        if value > settings.BERNOULLI['MAX_PREC']:
            raise serializers.ValidationError(f"prec must be at most {settings.BERNOULLI['MAX_PREC']}")
        return value

    def create(self, validated_data):
        options = SuiteOptions(
            fast=validated_data.pop('fast'),
            max_n=validated_data.pop('max_n', None),
            max_p=validated_data.pop('max_p', None),
            prec=validated_data.pop('prec', None),
        )
        return VerificationRun.objects.create(suite=validated_data['suite'], options=options.as_dict())


class VerificationRunListSerializer(serializers.ModelSerializer):
    class Meta:
        model = VerificationRun
        fields = ['id', 'suite', 'options', 'status', 'checks', 'failures', 'created_at', 'finished_at']
