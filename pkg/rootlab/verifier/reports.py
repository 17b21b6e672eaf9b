from __future__ import annotations

import io
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import wraps
from typing import Any, Dict, Iterable, Optional

from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from api.serializers import VerificationReportSerializer
from roots import exactlin as el
from roots.rootsys import TypeLabel
from roots.weyl import WeylWord

PASS = 'pass'
FAIL = 'fail'


@dataclass
class VerificationReport:
    clause: str
    status: str
    witnesses: Dict[str, Any] = field(default_factory=dict)
    elapsed_ms: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS


def exact(value):
    """Значение, пригодное для JSON: дроби как "p/q", кортежи как списки."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return el.format_rational(value)
    if isinstance(value, int):
        return value
    if isinstance(value, (WeylWord, TypeLabel)):
        return str(value)
    if isinstance(value, dict):
        return {str(key): exact(item) for key, item in value.items()}
    if isinstance(value, (tuple, list, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) \
            else value
        return [exact(item) for item in items]
    raise TypeError(f'Тип {type(value).__name__} не сериализуется.')


def make_report(clause: str, checks: Dict[str, bool],
                witnesses: Dict[str, Any]) -> VerificationReport:
    """pass только когда выполнена каждая проверка из checks."""
    status = PASS if all(checks.values()) else FAIL
    payload = {'checks': dict(checks)}
    payload.update(witnesses)
    return VerificationReport(clause=clause, status=status,
                              witnesses=exact(payload))


def error_report(clause: str, error: Exception) -> VerificationReport:
    return VerificationReport(
        clause=clause, status=FAIL,
        witnesses={'error': type(error).__name__, 'message': str(error)},
    )


def timed(check):
    """Добавляет к проверке аргумент timings; при нём заполняется elapsed_ms."""
    @wraps(check)
    def wrapper(*args, timings: bool = False, **kwargs) -> VerificationReport:
        started = time.perf_counter()
        report = check(*args, **kwargs)
        if timings:
            elapsed = time.perf_counter() - started
            report.elapsed_ms = int(round(elapsed * 1000))
        return report
    return wrapper


def report_data(reports: Iterable[VerificationReport]):
    return VerificationReportSerializer(list(reports), many=True).data


def serialize_report(report: VerificationReport, indent=None) -> bytes:
    data = VerificationReportSerializer(report).data
    return JSONRenderer().render(data, renderer_context={'indent': indent})


def serialize_reports(reports: Iterable[VerificationReport],
                      indent=None) -> bytes:
    return JSONRenderer().render(
        report_data(reports), renderer_context={'indent': indent})


def parse_report(content: bytes) -> VerificationReport:
    serializer = VerificationReportSerializer(
        data=JSONParser().parse(io.BytesIO(content)))
    serializer.is_valid(raise_exception=True)
    return VerificationReport(**serializer.validated_data)


def format_text(reports: Iterable[VerificationReport]) -> str:
    lines = []
    for report in reports:
        line = f'{report.status.upper():4} {report.clause}'
        if report.elapsed_ms is not None:
            line += f' ({report.elapsed_ms} ms)'
        lines.append(line)
        checks = report.witnesses.get('checks', {})
        lines.extend(
            f'     - {name}: {"ok" if value else "FAILED"}'
            for name, value in checks.items()
        )
        for flag in report.witnesses.get('flags', []):
            lines.append(f'     ! {flag}')
        if 'error' in report.witnesses:
            lines.append(f'     ! {report.witnesses["error"]}: '
                         f'{report.witnesses["message"]}')
    return '\n'.join(lines)
