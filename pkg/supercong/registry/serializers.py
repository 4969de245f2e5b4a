from fractions import Fraction

from rest_framework import serializers

from .types import Kind, Sample

FORMATS = ['json-lines', 'csv', 'table']

RECORD_FIELDS = ['id', 'p', 'status', 'modulus', 'lhs', 'rhs', 'branch', 'a', 'x', 'y',
                 'elapsed_ms']


def parse_sample(text: str) -> Sample:
    """Parses "1/2", "-3" or "t=2,n=3"."""
    text = text.strip()
    if '=' not in text:
        return Sample(a=Fraction(text))
    values = {}
    for part in text.split(','):
        key, _, value = part.partition('=')
        values[key.strip()] = int(value)
    if set(values) - {'t', 'n'} or 't' not in values:
        raise ValueError(f"expected t=..[,n=..], got {text!r}")
    return Sample(t=values['t'], n=values.get('n'))


def parse_prime_range(text: str):
    """Parses "lo..hi" (or a single prime) into (lo, hi)."""
    lo, sep, hi = text.partition('..')
    lo = int(lo)
    hi = int(hi) if sep else lo
    return lo, hi


class RunConfigSerializer(serializers.Serializer):
    ids = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    primes = serializers.CharField()
    format = serializers.ChoiceField(choices=FORMATS, default='table')
    out = serializers.CharField(required=False, allow_null=True, default=None)
    no_timings = serializers.BooleanField(default=False)
    strict_floors = serializers.BooleanField(default=False)
    fail_fast = serializers.BooleanField(default=False)
    include_conjectures = serializers.BooleanField(default=True)
    include_errata = serializers.BooleanField(default=False)
    samples = serializers.CharField(required=False, allow_null=True, default=None)
    seed = serializers.IntegerField(required=False, allow_null=True, default=None)
    per_parity = serializers.IntegerField(min_value=1, required=False, allow_null=True,
                                          default=None)
    threads = serializers.IntegerField(min_value=1, required=False, allow_null=True,
                                       default=None)
    precision = serializers.IntegerField(min_value=1, required=False, allow_null=True,
                                         default=None)

    def validate_primes(self, value):
        try:
            lo, hi = parse_prime_range(value)
        except ValueError:
            raise serializers.ValidationError(f"Expected a range like 5..499, got {value!r}")
        if lo > hi:
            raise serializers.ValidationError(f"Empty prime range {value}")
        if hi < 3:
            raise serializers.ValidationError("The range holds no odd prime")
        return lo, hi

    def validate_samples(self, value):
        if value in (None, ''):
            return None
        try:
            return [parse_sample(item) for item in value.split(';') if item.strip()]
        except (ValueError, ZeroDivisionError) as e:
            raise serializers.ValidationError(f"Malformed samples {value!r}: {str(e)}")


def _text(value):
    return None if value is None else str(value)


class VerificationResultSerializer(serializers.BaseSerializer):
    """One report record; integers become decimal strings."""

    def __init__(self, *args, timings=True, **kwargs):
        super().__init__(*args, **kwargs)
        self.timings = timings

    def to_representation(self, result):
        sample = result.sample
        record = {
            'id': result.statement_id,
            'p': str(result.p),
            'status': result.status.value,
            'modulus': _text(result.modulus),
            'lhs': _text(result.lhs_residue),
            'rhs': _text(result.rhs_residue),
            'branch': result.branch,
            'a': None if sample is None else str(sample),
            'x': _text(result.x),
            'y': _text(result.y),
            'elapsed_ms': None,
        }
        if self.timings and result.elapsed_ms is not None:
            record['elapsed_ms'] = round(result.elapsed_ms, 3)
        return record


class StatementSerializer(serializers.BaseSerializer):

    def to_representation(self, statement):
        exponents = sorted({b.exponent or statement.exponent for b in statement.branches})
        return {
            'id': statement.id,
            'kind': statement.kind.value,
            'hypotheses': statement.hypotheses,
            'exponents': exponents,
            'parametric': statement.parametric,
            'branches': [b.name for b in statement.branches],
            'preview_floor': statement.preview_floor,
            'quote': statement.quote,
            'note': statement.note,
        }


def kind_choices():
    return [k.value for k in Kind]
