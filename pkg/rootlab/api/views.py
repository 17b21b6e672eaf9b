from polytopes.polar import (polar_hrep, polar_vertices,
                             standard_facet_indices)
from polytopes.zonotopes import zt_equals_polar
from roots import exactlin as el
from roots.rootsys import build_root_system, dual_basis_vector
from roots.weyl import orbit
from verifier.reports import report_data
from verifier.verifier import run_all

from .base_view_set import BaseComputeViewSet
from .serializers import (EqualityReportSerializer, OrbitSerializer,
                          PolarSerializer, RootSystemSerializer)


class RootsViewSet(BaseComputeViewSet):
    """Все корни системы в базисе простых корней."""
    subcommand = 'roots'

    def compute(self, config):
        return RootSystemSerializer(build_root_system(config['label'])).data


class OrbitsViewSet(BaseComputeViewSet):
    """W-орбита c·o_j или c·ω_j."""
    subcommand = 'orbit'

    def compute(self, config):
        rs = build_root_system(config['label'])
        base = el.scale(config['scale'], dual_basis_vector(
            rs, config['vector_kind'], config['vector_index']))
        return OrbitSerializer(orbit(rs, base)).data


class PolarViewSet(BaseComputeViewSet):
    subcommand = 'polar'

    def compute(self, config):
        rs = build_root_system(config['label'])
        return PolarSerializer({
            'halfspaces': polar_hrep(rs).halfspaces,
            'vertices': polar_vertices(rs),
            'facet_indices': standard_facet_indices(rs),
        }).data


class ZonotopeCheckViewSet(BaseComputeViewSet):
    subcommand = 'zonotope-check'

    def compute(self, config):
        rs = build_root_system(config['label'])
        return EqualityReportSerializer(
            zt_equals_polar(rs, config['j'], config['scale'])).data


class VerifyViewSet(BaseComputeViewSet):
    """Проверка классификации до ранга max_rank."""
    subcommand = 'verify'

    def compute(self, config):
        return report_data(run_all(config['max_rank']))
