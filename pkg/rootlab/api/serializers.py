from rest_framework import serializers

from polytopes.zonotopes import generator_scale
from roots import exactlin as el
from roots.exceptions import InvalidRank
from roots.rootsys import (COWEIGHT, FAMILIES, WEIGHT, TypeLabel,
                           build_root_system)

SUBCOMMANDS = ('roots', 'orbit', 'polar', 'zonotope-check', 'verify')
FORMATS = ('text', 'json')
STATUSES = ('pass', 'fail')
VERIFY_ALL = 'all'
VERIFY_LEMMAS = 'lemmas'


class RationalField(serializers.Field):
    """Рациональное число в записи "p/q" или "p"."""
    default_error_messages = {
        'invalid': 'Ожидается рациональное число вида p/q.',
    }

    def to_representation(self, value):
        return el.format_rational(value)

    def to_internal_value(self, data):
        try:
            return el.parse_rational(str(data))
        except (ValueError, ZeroDivisionError):
            self.fail('invalid')


class VectorField(serializers.ListField):
    child = RationalField()

    def to_internal_value(self, data):
        return tuple(super().to_internal_value(data))


class RootSystemSerializer(serializers.Serializer):
    label = serializers.CharField()
    count = serializers.SerializerMethodField()
    roots = serializers.ListField(child=VectorField())

    def get_count(self, obj):
        return len(obj.roots)


class OrbitSerializer(serializers.Serializer):
    size = serializers.SerializerMethodField()
    points = serializers.ListField(child=VectorField())

    def get_size(self, obj):
        return len(obj.points)


class HalfspaceSerializer(serializers.Serializer):
    normal = VectorField()
    offset = RationalField()


class PolarSerializer(serializers.Serializer):
    """P* в виде {halfspaces, vertices, facet_indices}."""
    halfspaces = HalfspaceSerializer(many=True)
    vertices = serializers.ListField(child=VectorField())
    facet_indices = serializers.ListField(child=serializers.IntegerField())


class SumCertificateSerializer(serializers.Serializer):
    target = VectorField()
    subset = serializers.ListField(child=serializers.IntegerField())
    method = serializers.CharField()
    coefficients = serializers.ListField(child=RationalField())


class ContainmentSerializer(serializers.Serializer):
    contained = serializers.BooleanField()
    support = RationalField()
    violating_root = VectorField(allow_null=True)


class EqualityReportSerializer(serializers.Serializer):
    label = serializers.CharField()
    j = serializers.IntegerField()
    scale = RationalField()
    threshold = RationalField(allow_null=True)
    generator_count = serializers.IntegerField()
    containment = ContainmentSerializer()
    certificates = serializers.SerializerMethodField()
    missing = serializers.ListField(child=serializers.IntegerField())
    reverse_inclusion = serializers.BooleanField()
    equal = serializers.BooleanField()

    def get_certificates(self, obj):
        return {
            str(i): SumCertificateSerializer(certificate).data
            for i, certificate in sorted(obj.certificates.items())
        }


class VerificationReportSerializer(serializers.Serializer):
    """Отчёт о проверке одного утверждения; ключи в фиксированном порядке."""
    clause = serializers.CharField()
    status = serializers.ChoiceField(choices=STATUSES)
    witnesses = serializers.JSONField()
    elapsed_ms = serializers.IntegerField(
        allow_null=True, default=None, min_value=0)


class CliConfigSerializer(serializers.Serializer):
    """Параметры команды rootlab и запросов API."""
    subcommand = serializers.ChoiceField(choices=SUBCOMMANDS)
    family = serializers.CharField(required=False, max_length=1)
    rank = serializers.IntegerField(required=False, min_value=1)
    vector = serializers.RegexField(
        r'^(coweight|weight):\d+$', required=False, default='coweight:1')
    j = serializers.IntegerField(required=False, allow_null=True,
                                 min_value=1)
    scale = RationalField(required=False, allow_null=True)
    target = serializers.CharField(required=False, default=VERIFY_ALL)
    max_rank = serializers.IntegerField(required=False, default=8,
                                        min_value=1)
    format = serializers.ChoiceField(choices=FORMATS, default='text')
    output = serializers.CharField(required=False, allow_null=True)
    timings = serializers.BooleanField(required=False, default=False)
    lemmas = serializers.BooleanField(required=False, default=False)

    def validate_family(self, value):
        value = value.upper()
        if value not in FAMILIES:
            raise serializers.ValidationError(
                f'Серия должна быть одной из {", ".join(FAMILIES)}.')
        return value

    def validate_target(self, value):
        if value.lower() in (VERIFY_ALL, VERIFY_LEMMAS):
            return value.lower()
        try:
            return TypeLabel.parse(value)
        except InvalidRank as error:
            raise serializers.ValidationError(str(error))

    def validate(self, attrs):
        if attrs['subcommand'] == 'verify':
            return attrs
        if 'family' not in attrs or 'rank' not in attrs:
            raise serializers.ValidationError(
                'Для этой подкоманды нужны серия и ранг.')
        try:
            label = TypeLabel(attrs['family'], attrs['rank'])
        except InvalidRank as error:
            raise serializers.ValidationError({'rank': str(error)})
        attrs['label'] = label
        if attrs['subcommand'] == 'orbit':
            kind, index = attrs['vector'].split(':')
            attrs['vector_kind'] = COWEIGHT if kind == 'coweight' else WEIGHT
            attrs['vector_index'] = self._checked_index(
                'vector', int(index), label)
            if attrs.get('scale') is None:
                attrs['scale'] = el.as_rational(1)
        if attrs['subcommand'] == 'zonotope-check':
            self._zonotope_defaults(attrs, label)
        return attrs

    def _zonotope_defaults(self, attrs, label):
        """j и c по умолчанию: известные образующие, иначе o_j."""
        rs = build_root_system(label)
        known = generator_scale(rs)
        j = attrs.get('j')
        if j is None:
            j = known[0] if known else 1
        attrs['j'] = self._checked_index('j', j, label)
        if attrs.get('scale') is None:
            if known and known[0] == attrs['j']:
                attrs['scale'] = known[1]
            else:
                attrs['scale'] = el.as_rational(1) / rs.m[attrs['j'] - 1]

    @staticmethod
    def _checked_index(field, value, label):
        if not 1 <= value <= label.rank:
            raise serializers.ValidationError(
                {field: f'Индекс {value} вне диапазона 1..{label.rank}.'})
        return value
