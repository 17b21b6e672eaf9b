from fractions import Fraction

import pytest

from roots import exactlin as el
from roots.exceptions import IndexOutOfRange, InvalidRank
from roots.rootsys import (COWEIGHT, WEIGHT, TypeLabel, alcove_vertex,
                           build_root_system, coroot_coordinates,
                           dual_basis_vector, enumerate_roots, highest_root,
                           length_ratio, leq_coroot, parabolic_highest_root,
                           root_system, roots_with_support)

from .common import vector


class Test01RootSystems:

    @pytest.mark.parametrize('family, rank, count', [
        ('A', 1, 2), ('A', 2, 6), ('B', 3, 18), ('C', 3, 18),
        ('D', 4, 24), ('G', 2, 12), ('F', 4, 48), ('E', 6, 72),
        ('E', 7, 126), ('E', 8, 240),
    ])
    def test_01_root_count(self, family, rank, count):
        rs = root_system(family, rank)
        assert len(rs.roots) == count, (
            f'Проверьте, что в системе {family}{rank} ровно {count} корней'
        )
        assert len(rs.positive_roots) == count // 2, (
            'Проверьте, что положительных корней ровно половина'
        )

    def test_02_long_roots(self, f4, g2):
        assert len(f4.long_roots) == 24, (
            'Проверьте, что в F4 ровно 24 длинных корня'
        )
        assert len(g2.long_roots) == 6
        e8 = root_system('E', 8)
        assert len(e8.long_roots) == 240, (
            'Проверьте, что в E8 все корни длинные'
        )

    def test_03_a1_roots(self):
        assert set(enumerate_roots(root_system('A', 1))) == {
            vector(1), vector(-1)}

    def test_04_roots_are_closed(self, b3):
        for beta in b3.roots:
            assert b3.is_root(el.neg(beta)), (
                'Проверьте, что множество корней замкнуто относительно -β'
            )
            assert all(c >= 0 for c in beta) or all(c <= 0 for c in beta), (
                'Проверьте, что координаты каждого корня одного знака'
            )

    def test_05_highest_root(self, a2, b3, g2, c3):
        theta, m = highest_root(a2)
        assert theta == vector(1, 1) and m == [1, 1], (
            'Проверьте, что для A2 θ = α1 + α2 и m = (1, 1)'
        )
        assert b3.m == (1, 2, 2), 'Проверьте, что для B3 m = (1, 2, 2)'
        assert g2.m == (3, 2), 'Проверьте, что для G2 m = (3, 2)'
        assert c3.m[0] == 2, 'Проверьте, что для C_n m1 = 2'
        assert root_system('A', 5).m == (1,) * 5
        assert root_system('E', 8).theta == vector(2, 3, 4, 6, 5, 4, 3, 2)

    @pytest.mark.parametrize('family, rank', [
        ('A', 3), ('B', 4), ('C', 4), ('D', 5), ('E', 6), ('F', 4), ('G', 2),
    ])
    def test_06_theta_normalized(self, family, rank):
        rs = root_system(family, rank)
        assert rs.norm2(rs.theta) == 2, (
            'Проверьте, что длинные корни нормированы условием (θ, θ) = 2'
        )
        assert el.is_symmetric(rs.gram)

    def test_07_weights_and_coweights(self, a2, f4):
        assert dual_basis_vector(a2, COWEIGHT, 1) == vector('2/3', '1/3')
        assert dual_basis_vector(f4, WEIGHT, 4) == vector(1, 2, 3, 2), (
            'Проверьте, что ω4 для F4 равен α1 + 2α2 + 3α3 + 2α4'
        )
        e6 = root_system('E', 6)
        assert dual_basis_vector(e6, WEIGHT, 1) == vector(
            '4/3', 1, '5/3', 2, '4/3', '2/3'), (
            'Проверьте, что ω1 для E6 равен (4/3, 1, 5/3, 2, 4/3, 2/3)'
        )
        e8 = root_system('E', 8)
        assert e8.weights[0] == vector(4, 5, 7, 10, 8, 6, 4, 2)
        for i, alpha in enumerate(f4.simple_indices):
            coroot = f4.simple_coroot(alpha)
            for j in f4.simple_indices:
                expected = Fraction(int(i + 1 == j))
                assert f4.pair(f4.weights[j - 1], coroot) == expected, (
                    'Проверьте, что (ω_j, α_i^∨) = δ_ij'
                )
                assert f4.pair(f4.coweights[j - 1],
                               f4.simple_root(alpha)) == expected, (
                    'Проверьте, что (ω_j^∨, α_i) = δ_ij'
                )

    def test_08_dual_basis_vector_errors(self, a2):
        with pytest.raises(IndexOutOfRange):
            dual_basis_vector(a2, COWEIGHT, 3)
        with pytest.raises(ValueError):
            dual_basis_vector(a2, 'root', 1)

    def test_09_alcove_vertices(self, a3, c3):
        assert alcove_vertex(a3, 1) == a3.coweights[0], (
            'Проверьте, что для A_n o1 = ω1^∨'
        )
        assert alcove_vertex(c3, 1) == el.scale(Fraction(1, 2),
                                                c3.coweights[0]), (
            'Проверьте, что для C_n o1 = ω1^∨/2'
        )
        for i in c3.simple_indices:
            assert c3.pair(alcove_vertex(c3, i), c3.theta) == 1, (
                'Проверьте, что (o_i, θ) = 1'
            )

    def test_10_length_ratio(self, a3, b3, g2):
        assert all(length_ratio(a3, j) == 1 for j in a3.simple_indices)
        assert length_ratio(b3, 3) == 2, 'Проверьте, что r3 = 2 для B3'
        assert length_ratio(g2, 1) == 3, 'Проверьте, что r1 = 3 для G2'

    def test_11_type_label(self):
        assert TypeLabel.parse('e8') == TypeLabel('E', 8)
        assert str(TypeLabel('B', 3)) == 'B3'
        for family, rank in (('D', 3), ('E', 9), ('G', 3), ('X', 2),
                             ('A', 0), ('B', 1)):
            with pytest.raises(InvalidRank):
                TypeLabel(family, rank)
        with pytest.raises(InvalidRank):
            TypeLabel.parse('E')

    def test_12_build_is_cached(self):
        label = TypeLabel('C', 4)
        assert build_root_system(label) is build_root_system(label)

    def test_13_coroot_order(self, c2):
        assert coroot_coordinates(c2, vector(1, 0)) == vector('1/2', 0), (
            'Проверьте, что короткий α1 в C2 равен α1^∨/2'
        )
        assert leq_coroot(c2, vector(0, 0), c2.simple_coroot(1))
        assert not leq_coroot(c2, vector(0, 0), vector(1, 0)), (
            'Проверьте, что разность в порядке ≤^∨ должна быть целой в базисе кокорней'
        )

    def test_14_parabolic_highest_root(self):
        e8 = root_system('E', 8)
        assert parabolic_highest_root(e8, range(1, 7)) == vector(
            1, 2, 2, 3, 2, 1, 0, 0), (
            'Проверьте старший корень подсистемы E6, порождённой α1…α6'
        )

    def test_15_roots_with_support(self, a2):
        assert set(roots_with_support(a2, 1)) == {vector(1, 0), vector(1, 1)}
