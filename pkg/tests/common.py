import json
from fractions import Fraction
from io import StringIO

from django.core.management import call_command


def vector(*values):
    """vector(1, '2/3') -> (Fraction(1), Fraction(2, 3))."""
    return tuple(Fraction(value) for value in values)


def call_rootlab(*args):
    out = StringIO()
    call_command('rootlab', *args, stdout=out)
    return out.getvalue()


def call_rootlab_json(*args):
    return json.loads(call_rootlab(*args, '--format', 'json'))


def failing_report(label, timings=False):
    from verifier.reports import FAIL, VerificationReport
    return VerificationReport(clause=f'zonotope/{label}', status=FAIL)
