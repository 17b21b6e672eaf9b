import argparse
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from api.serializers import (SUBCOMMANDS, VERIFY_ALL, VERIFY_LEMMAS,
                             CliConfigSerializer, EqualityReportSerializer,
                             OrbitSerializer, PolarSerializer,
                             RootSystemSerializer)
from polytopes.polar import (polar_hrep, polar_vertices,
                             standard_facet_indices)
from polytopes.zonotopes import zt_equals_polar
from roots import exactlin as el
from roots.exceptions import RootLabError
from roots.rootsys import build_root_system, dual_basis_vector
from roots.weyl import orbit
from verifier.reports import format_text, report_data
from verifier.verifier import (run_all, verify_case, verify_lemma_suite,
                               verify_structure_lemmas)

logger = logging.getLogger(__name__)

VERIFICATION_FAILED = 1
USAGE_ERROR = 2


def _vector_line(x):
    return ' '.join(el.format_vector(x))


class Command(BaseCommand):
    help = ('Точные системы корней, многогранник P*, зоноэдры '
            'и проверка классификации. Код возврата 1: проверка не '
            'пройдена; 2: ошибка аргументов или предусловий библиотеки '
            '(например, GeneratorSetTooLarge), её класс указан в сообщении.')
    requires_system_checks = []

    def add_arguments(self, parser):
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--format', choices=('text', 'json'),
                            default='text')
        common.add_argument('--output', help='Файл для вывода.')
        common.add_argument('--timings', action='store_true',
                            help='Заполнять elapsed_ms в отчётах.')

        subparsers = parser.add_subparsers(
            dest='subcommand', metavar='{%s}' % ','.join(SUBCOMMANDS))
        subparsers.required = True
        typed = argparse.ArgumentParser(add_help=False)
        typed.add_argument('family')
        typed.add_argument('rank', type=int)

        subparsers.add_parser(
            'roots', parents=[typed, common], help='Все корни системы.')
        orbit_parser = subparsers.add_parser(
            'orbit', parents=[typed, common], help='W-орбита вектора.')
        orbit_parser.add_argument('--vector', default='coweight:1',
                                  help='coweight:<j> или weight:<j>.')
        orbit_parser.add_argument('--scale', default=None)
        subparsers.add_parser(
            'polar', parents=[typed, common],
            help='Полупространства, вершины и гиперграни P*.')
        zonotope_parser = subparsers.add_parser(
            'zonotope-check', parents=[typed, common],
            help='Проверка P* = ZT(W·c·ω_j^∨).')
        zonotope_parser.add_argument('--j', type=int, default=None)
        zonotope_parser.add_argument('--scale', default=None)
        verify_parser = subparsers.add_parser(
            'verify', parents=[common],
            help='Проверка классификации: all, lemmas или тип, например E8.')
        verify_parser.add_argument('target', nargs='?', default=VERIFY_ALL)
        verify_parser.add_argument('--max-rank', type=int, default=8)
        verify_parser.add_argument(
            '--lemmas', action='store_true',
            help='Для отдельного типа: структурные свойства вместо случая.')

    def handle(self, *args, **options):
        config = self._config(options)
        try:
            content, failed = getattr(
                self, 'handle_' + config['subcommand'].replace('-', '_')
            )(config)
        except RootLabError as error:
            raise CommandError(f'{type(error).__name__}: {error}',
                               returncode=USAGE_ERROR)
        self._write(content, config.get('output'))
        if failed:
            raise CommandError('Проверка не пройдена.',
                               returncode=VERIFICATION_FAILED)

    def _config(self, options):
        data = {
            key: value for key, value in options.items()
            if key in CliConfigSerializer().fields and value is not None
        }
        serializer = CliConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(
                f'Неверные параметры: {dict(serializer.errors)}',
                returncode=USAGE_ERROR)
        return serializer.validated_data

    def _write(self, content, path):
        if path:
            with open(path, 'w', encoding='utf-8') as stream:
                stream.write(content + '\n')
            logger.info('Результат записан в %s', path)
        else:
            self.stdout.write(content)

    @staticmethod
    def _render(data, config, text):
        if config['format'] == 'json':
            return JSONRenderer().render(
                data, renderer_context={'indent': 2}).decode('utf-8')
        return text()

    def handle_roots(self, config):
        rs = build_root_system(config['label'])
        return self._render(
            RootSystemSerializer(rs).data, config,
            lambda: '\n'.join(_vector_line(beta) for beta in rs.roots),
        ), False

    def handle_orbit(self, config):
        rs = build_root_system(config['label'])
        base = el.scale(config['scale'], dual_basis_vector(
            rs, config['vector_kind'], config['vector_index']))
        points = orbit(rs, base)
        return self._render(
            OrbitSerializer(points).data, config,
            lambda: '\n'.join(
                [f'size: {len(points)}']
                + [_vector_line(x) for x in points]),
        ), False

    def handle_polar(self, config):
        rs = build_root_system(config['label'])
        data = {
            'halfspaces': polar_hrep(rs).halfspaces,
            'vertices': polar_vertices(rs),
            'facet_indices': standard_facet_indices(rs),
        }

        def text():
            lines = [f'facet_indices: {data["facet_indices"]}',
                     f'halfspaces: {len(data["halfspaces"])}']
            lines += [f'({_vector_line(h.normal)}, x) <= '
                      f'{el.format_rational(h.offset)}'
                      for h in data['halfspaces']]
            lines.append(f'vertices: {len(data["vertices"])}')
            lines += [_vector_line(x) for x in data['vertices']]
            return '\n'.join(lines)

        return self._render(PolarSerializer(data).data, config, text), False

    def handle_zonotope_check(self, config):
        rs = build_root_system(config['label'])
        report = zt_equals_polar(rs, config['j'], config['scale'])

        def text():
            threshold = (el.format_rational(report.threshold)
                         if report.threshold is not None else '-')
            return '\n'.join([
                f'{report.label}: ZT(W·{el.format_rational(report.scale)}'
                f'·ω_{report.j}^∨) = P*: {"yes" if report.equal else "no"}',
                f'generators: {report.generator_count}',
                f'contained: {report.containment.contained} '
                f'(support {el.format_rational(report.containment.support)})',
                f'certified vertices: {sorted(report.certificates)}',
                f'missing vertices: {report.missing}',
                f'threshold: {threshold}',
            ])

        return self._render(
            EqualityReportSerializer(report).data, config, text), False

    def handle_verify(self, config):
        target, timings = config['target'], config['timings']
        if target == VERIFY_ALL:
            reports = run_all(config['max_rank'], timings=timings)
        elif target == VERIFY_LEMMAS:
            reports = [verify_lemma_suite(config['max_rank'],
                                          timings=timings)]
        elif config['lemmas']:
            reports = [verify_structure_lemmas(
                target.family, target.rank, timings=timings)]
        else:
            reports = [verify_case(target, timings=timings)]
        failed = not all(report.passed for report in reports)
        return self._render(
            report_data(reports), config, lambda: format_text(reports),
        ), failed
