import pytest

from roots import exactlin as el
from roots.exceptions import NonSimpleLetter, NotARoot, RankTooLarge
from roots.rootsys import root_system
from roots.weyl import (WeylWord, apply_word, check_coset_minimality,
                        check_product_formulas, expansion_nu_eta,
                        inversion_set, inversion_set_by_definition,
                        is_dominant, minimal_coset_representatives, orbit,
                        q_index, reduce_word, reflect, stabilizer_generators,
                        stabilizer_simple_indices, theta_perp_indices,
                        weyl_group_elements)

from .common import vector


class Test02WeylGroup:

    def test_01_reflect(self, a2):
        assert reflect(a2, vector(1, 0), vector('2/3', '1/3')) == vector(
            '-1/3', '1/3'), (
            'Проверьте, что s_α1(ω1^∨) = (-1/3, 1/3) для A2'
        )
        with pytest.raises(NotARoot):
            reflect(a2, vector(2, 0), vector(1, 0))

    def test_02_reflect_is_involutive_isometry(self, b3):
        x, y = vector('1/2', -1, 3), vector(2, '1/3', 0)
        for beta in b3.roots:
            sx = reflect(b3, beta, x)
            assert reflect(b3, beta, sx) == x, (
                'Проверьте, что s_β(s_β(x)) = x'
            )
            assert b3.pair(sx, reflect(b3, beta, y)) == b3.pair(x, y), (
                'Проверьте, что отражение сохраняет форму ( , )'
            )
            assert reflect(b3, beta, beta) == el.neg(beta)

    def test_03_apply_word_order(self, a2):
        x = vector('2/3', '1/3')
        assert apply_word(a2, WeylWord(), x) == x, (
            'Проверьте, что пустое слово действует тождественно'
        )
        word = WeylWord((2, 1))
        expected = reflect(a2, vector(0, 1), reflect(a2, vector(1, 0), x))
        assert apply_word(a2, word, x) == expected == vector(
            '-1/3', '-2/3'), (
            'Проверьте, что в слове s2s1 первой действует последняя буква'
        )
        root_word = WeylWord((vector(1, 1),))
        assert apply_word(a2, root_word, x) == reflect(a2, vector(1, 1), x)

    def test_04_nu_eta(self, a2):
        nu, eta = expansion_nu_eta(a2, WeylWord((1, 2)))
        assert nu == [vector(1, 0), vector(1, 1)], (
            'Проверьте, что ν_2 = s_{β1}(β2)'
        )
        assert eta == [vector(1, 1), vector(0, 1)], (
            'Проверьте, что η_1 = s_{β2}(β1)'
        )

    def test_05_product_formulas(self, g2):
        word = WeylWord((1, vector(3, 2), 2, vector(1, 1), 1))
        for x in (vector(1, 0), vector('1/2', '-2/3'), vector(-3, 5)):
            assert check_product_formulas(g2, word, x), (
                'Проверьте разложения w(x) через ν_i и η_i'
            )

    def test_06_inversion_set(self, a2):
        empty = inversion_set(a2, WeylWord())
        assert len(empty) == 0 and empty.reduced, (
            'Проверьте, что N(e) пусто и пустое слово приведено'
        )
        square = inversion_set(a2, WeylWord((1, 1)))
        assert len(square) == 0 and not square.reduced, (
            'Проверьте, что для s1s1 множество инверсий пусто и слово не приведено'
        )
        assert square.reduced_word == WeylWord()
        longest = inversion_set(a2, WeylWord((1, 2, 1)))
        assert set(longest.roots) == set(a2.positive_roots), (
            'Проверьте, что для s1s2s1 в A2 N(w) = Φ⁺'
        )
        assert longest.reduced
        with pytest.raises(NonSimpleLetter):
            inversion_set(a2, WeylWord((vector(1, 1),)))

    @pytest.mark.parametrize('letters', [
        (1, 2, 3, 2, 1), (3, 3, 2), (2, 1, 2, 1, 2, 1, 3), (1, 2, 1, 2),
    ])
    def test_07_inversion_set_matches_definition(self, b3, letters):
        word = WeylWord(letters)
        result = inversion_set(b3, word)
        assert result.roots == inversion_set_by_definition(b3, word), (
            'Проверьте, что N(w) совпадает с {γ > 0 : w⁻¹(γ) < 0}'
        )
        assert len(result.reduced_word) == len(result), (
            'Проверьте, что длина приведённого слова равна |N(w)|'
        )

    def test_08_reduce_word(self, a3):
        word = reduce_word(a3, WeylWord((1, 2, 1, 2)))
        assert len(word) == 2
        x = vector(1, 2, 3)
        assert apply_word(a3, word, x) == apply_word(
            a3, WeylWord((1, 2, 1, 2)), x), (
            'Проверьте, что приведённое слово задаёт тот же элемент W'
        )

    def test_09_orbit(self, a2):
        result = orbit(a2, vector('2/3', '1/3'))
        assert result.points == (
            vector('-1/3', '-2/3'), vector('-1/3', '1/3'),
            vector('2/3', '1/3'),
        ), 'Проверьте W-орбиту ω1^∨ в A2'
        assert el.is_zero(result.total()), (
            'Проверьте, что сумма точек W-орбиты равна нулю'
        )
        assert len(orbit(a2, vector(0, 0))) == 1

    def test_10_orbit_with_generators(self, b3):
        result = orbit(b3, b3.coweights[2], generators=[1, 3])
        assert len(result) == 2
        assert len(orbit(b3, b3.coweights[2])) == 8

    def test_11_stabilizer(self, a2):
        assert set(stabilizer_generators(a2, vector(0, 0))) == set(
            a2.positive_roots), (
            'Проверьте, что стабилизатор нуля порождают все положительные корни'
        )
        assert stabilizer_generators(a2, a2.coweights[0]) == [vector(0, 1)]
        assert stabilizer_generators(a2, vector(1, 1)) == [], (
            'Проверьте, что у точки открытой камеры стабилизатор тривиален'
        )
        assert stabilizer_simple_indices(a2, a2.coweights[0]) == [2]
        assert is_dominant(a2, a2.coweights[1])
        assert not is_dominant(a2, vector('-1/3', '1/3'))

    def test_12_q_index(self, a3, b3, g2):
        assert q_index(a3, 1) == 1, 'Проверьте, что q1 = 1 для A_n'
        assert q_index(b3, 3) == 2, 'Проверьте, что q3 = 2 для B3'
        assert q_index(g2, 1) == 2, 'Проверьте, что q1 = 2 для G2'
        assert theta_perp_indices(b3) == [1, 3]

    def test_13_weyl_group_elements(self, a2, a3, b3):
        assert len(weyl_group_elements(a2)) == 6
        assert len(weyl_group_elements(a3)) == 24
        assert len(weyl_group_elements(b3)) == 48, (
            'Проверьте, что |W(B3)| = 48'
        )
        with pytest.raises(RankTooLarge):
            weyl_group_elements(root_system('E', 6))

    def test_14_minimal_coset_representatives(self, b3):
        representatives = minimal_coset_representatives(b3, 3)
        assert len(representatives) == 8
        assert representatives[0][0] == WeylWord(), (
            'Проверьте, что первый представитель смежного класса тождественный'
        )
        for word, point in representatives:
            assert apply_word(b3, word, b3.coweights[2]) == point
            if word:
                checks = check_coset_minimality(b3, 3, word)
                assert all(checks.values()), (
                    f'Проверьте свойства минимального представителя {word}: '
                    f'{checks}'
                )

    def test_15_word_parse(self):
        assert WeylWord.parse('s2s4s3') == WeylWord((2, 4, 3))
        assert WeylWord.parse('e') == WeylWord()
        assert str(WeylWord((1, 2))) == 's1s2'
        assert WeylWord((1, 2, 3)).inverse() == WeylWord((3, 2, 1))
        assert WeylWord((1, 2, 3)).suffix(2) == WeylWord((2, 3))
