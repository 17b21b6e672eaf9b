from fractions import Fraction

import pytest

from polytopes.polar import (arrangement_normals, cutting_pairs,
                             genuine_vertices,
                             hyperplane_cuts_facet, is_centrally_symmetric,
                             is_w_stable, parabolic_face, polar_hrep,
                             polar_vertices, standard_facet,
                             standard_facet_indices,
                             standard_hyperplane_indices, support_value)
from roots import exactlin as el
from roots.exceptions import (NotAFacetIndex, RankTooLargeForFullArrangement,
                              ZeroVector)
from roots.rootsys import root_system
from roots.weyl import WeylWord, apply_word, orbit

from .common import vector


class Test03PolarPolytope:

    def test_01_polar_hrep(self, a2, g2):
        assert len(polar_hrep(a2).halfspaces) == 6, (
            'Проверьте, что P* для A2 задаётся 6 неравенствами'
        )
        assert len(polar_hrep(g2).halfspaces) == 6, (
            'Проверьте, что для G2 неравенства дают только 6 длинных корней'
        )

    @pytest.mark.parametrize('family, rank, count', [
        ('A', 1, 2), ('A', 2, 6), ('A', 3, 14), ('A', 4, 30), ('A', 5, 62),
        ('C', 2, 8),
    ])
    def test_02_polar_vertex_count(self, family, rank, count):
        assert len(polar_vertices(root_system(family, rank))) == count, (
            f'Проверьте число вершин P* для {family}{rank}'
        )

    @pytest.mark.parametrize('family, rank, count', [
        ('A', 3, 14), ('B', 3, 14), ('C', 2, 4), ('G', 2, 6), ('D', 4, 24),
    ])
    def test_03_vertices_are_genuine(self, family, rank, count):
        rs = root_system(family, rank)
        hrep = polar_hrep(rs)
        vertices = polar_vertices(rs)
        genuine = genuine_vertices(rs)
        assert len(genuine) == count, (
            f'Проверьте число настоящих вершин P* для {family}{rank}'
        )
        facet_orbits = set()
        for i in standard_facet_indices(rs):
            facet_orbits.update(orbit(rs, rs.alcove_vertices[i - 1]))
        assert set(genuine) == facet_orbits, (
            'Проверьте, что вершины P* совпадают с орбитами o_i для гиперграней F_i'
        )
        assert is_w_stable(rs, vertices), (
            'Проверьте, что множество вершин P* W-инвариантно'
        )
        assert is_centrally_symmetric(vertices), (
            'Проверьте, что P* центрально-симметричен'
        )
        assert all(support_value(rs, x) == 1 for x in vertices)
        assert hrep.contains(el.zero_vector(rank))
        assert not hrep.contains(el.scale(2, vertices[0]))

    @pytest.mark.parametrize('family, rank, indices', [
        ('A', 3, [1, 2, 3]), ('B', 3, [1, 3]), ('B', 4, [1, 4]),
        ('B', 6, [1, 6]), ('C', 3, [3]), ('E', 7, [2, 7]), ('F', 4, [4]),
        ('G', 2, [1]),
    ])
    def test_04_standard_facet_indices(self, family, rank, indices):
        assert standard_facet_indices(root_system(family, rank)) == indices, (
            f'Проверьте индексы стандартных гиперграней для {family}{rank}'
        )

    def test_05_standard_facet(self, a2):
        facet = standard_facet(a2, 1)
        assert set(facet.vertex_roots) == {vector(1, 0), vector(1, 1)}
        assert facet.barycenter == vector(1, '1/2'), (
            'Проверьте, что барицентр F1 в A2 равен α1 + α2/2'
        )
        assert facet.weight_multiple == Fraction(3, 2), (
            'Проверьте, что барицентр F1 пропорционален ω1 с множителем 3/2'
        )
        with pytest.raises(NotAFacetIndex):
            standard_facet(root_system('B', 4), 2)

    @pytest.mark.parametrize('family, rank', [
        ('B', 4), ('D', 5), ('E', 6), ('F', 4), ('C', 4),
    ])
    def test_06_barycenter_proportional_to_weight(self, family, rank):
        rs = root_system(family, rank)
        for i in standard_facet_indices(rs):
            facet = standard_facet(rs, i)
            assert facet.weight_multiple > 0
            assert facet.barycenter == el.scale(facet.weight_multiple,
                                                rs.weights[i - 1])

    def test_07_parabolic_face(self, c3):
        face = parabolic_face(c3, (1,))
        assert face.vertex_roots == (c3.theta,), (
            'Проверьте, что в C3 уровень m1 = 2 по α1 содержит только θ'
        )
        a3 = root_system('A', 3)
        face = parabolic_face(a3, (1, 3))
        assert face.vertex_roots == (vector(1, 1, 1),)
        assert face.barycenter == vector(1, 1, 1)

    def test_08_arrangement_normals(self, a2, b3, f4):
        assert len(arrangement_normals(a2)) == 3, (
            'Проверьте, что для A2 гиперплоскостей H_P три'
        )
        assert len(arrangement_normals(b3)) == 4
        assert len(arrangement_normals(f4)) == 12
        assert a2.coweights[0] in arrangement_normals(a2)
        assert el.scale(-3, a2.coweights[1]) in arrangement_normals(a2), (
            'Проверьте, что нормали сравниваются с точностью до множителя'
        )
        with pytest.raises(RankTooLargeForFullArrangement):
            arrangement_normals(root_system('E', 7))

    def test_09_standard_hyperplane_indices(self, b3, f4):
        assert standard_hyperplane_indices(b3) == [3]
        assert standard_hyperplane_indices(f4) == [4]
        assert standard_hyperplane_indices(root_system('B', 5)) == [1, 5]
        assert standard_hyperplane_indices(root_system('E', 6)) == [1, 6]

    def test_10_cut_by_reflected_coweight(self):
        rs = root_system('B', 4)
        facet = standard_facet(rs, 1)
        normal = apply_word(rs, WeylWord((1,)), rs.coweights[0])
        witness = hyperplane_cuts_facet(rs, normal, facet)
        assert witness.through_barycenter, (
            'Проверьте, что s1(ω1^∨)^⊥ проходит через барицентр F1 в B4'
        )
        assert witness.mixed_signs and witness.cuts, (
            'Проверьте, что на вершинах F1 встречаются оба знака'
        )

    def test_11_own_coweight_does_not_cut(self):
        rs = root_system('B', 4)
        facet = standard_facet(rs, 1)
        witness = hyperplane_cuts_facet(rs, rs.coweights[0], facet)
        assert witness.barycenter_pairing == rs.m[0], (
            'Проверьте, что (барицентр F_i, ω_i^∨) = m_i'
        )
        assert not witness.cuts
        with pytest.raises(ZeroVector):
            hyperplane_cuts_facet(rs, el.zero_vector(4), facet)

    def test_12_cutting_pairs(self, a2, b3):
        assert cutting_pairs(a2) == [], (
            'Проверьте, что для A2 ни одна гиперплоскость не разрезает гипергрань'
        )
        assert cutting_pairs(b3) == []
        assert cutting_pairs(root_system('B', 4)), (
            'Проверьте, что для B4 разрез гиперграни существует'
        )
