# trig_sums/serializers.py
from rest_framework import serializers

from analytic_core.serializers import PrecisionQuerySerializer

from .expansions import BRACKET_KINDS, MAX_BRACKET_N
from .sums import TRIG_KINDS

MAX_API_P = 5000
MAX_API_SWEEP = 200


class TrigSumQuerySerializer(PrecisionQuerySerializer):
    kind = serializers.ChoiceField(choices=TRIG_KINDS)
    p = serializers.IntegerField(min_value=1, max_value=MAX_API_P)


class IdentityQuerySerializer(PrecisionQuerySerializer):
    p = serializers.IntegerField(min_value=1, max_value=MAX_API_P)
    relations = serializers.ChoiceField(choices=['trig', 'series'], default='trig')


class ExpansionCheckQuerySerializer(PrecisionQuerySerializer):
    check = serializers.ChoiceField(choices=['I', 'J', 'pr72'])
    p = serializers.IntegerField(min_value=1, max_value=MAX_API_P)
    m = serializers.IntegerField(min_value=1, max_value=8, default=1)

    def validate(self, attrs):
        if attrs['check'] != 'pr72' and attrs['p'] < 2:
            raise serializers.ValidationError({'p': "the I and J expansions need p >= 2"})
        return attrs


class BracketQuerySerializer(PrecisionQuerySerializer):
    kind = serializers.ChoiceField(choices=BRACKET_KINDS)
    p = serializers.IntegerField(min_value=1, max_value=MAX_API_P)
    n = serializers.IntegerField(min_value=0, max_value=MAX_BRACKET_N, default=0)


class SweepQuerySerializer(PrecisionQuerySerializer):
    kind = serializers.ChoiceField(choices=BRACKET_KINDS)
    max_p = serializers.IntegerField(min_value=1, max_value=MAX_API_SWEEP)
    n = serializers.IntegerField(min_value=0, max_value=MAX_BRACKET_N, default=0)
