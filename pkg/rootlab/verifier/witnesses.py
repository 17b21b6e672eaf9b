"""Таблица свидетелей: для каждого типа вне A, C, B3, G2 тройка (F_i, k, w).

Гипергрань F_i, стандартная гиперплоскость (ω_k^∨)^⊥ и слово w, для
которых w(ω_i) ⊥ ω_k^∨. Тогда гиперплоскость w⁻¹(ω_k^∨)^⊥ проходит через
барицентр F_i и разрезает её внутренность.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from roots import exactlin as el
from roots.exactlin import Vector
from roots.exceptions import MissingWitnessRow
from roots.rootsys import RootSystem, TypeLabel
from roots.weyl import WeylWord

E8_INNER_BLOCK = WeylWord((2, 4, 3, 5, 4, 2, 6, 5, 4, 3))
E8_WORD = WeylWord(
    (8, 7, 6, 5, 4, 3, 1) + E8_INNER_BLOCK.letters + (1,))


@dataclass(frozen=True)
class WitnessRow:
    """Строка таблицы.

    expected_drop: коэффициенты при α в записи w(ω_i) = ω_i - Σ c_j α_j,
    stated_weight: разложение ω_i, напечатанное в таблице, если оно есть.
    """
    label: TypeLabel
    facet_index: int
    hyperplane_index: int
    word: WeylWord
    expected_drop: Optional[Vector] = None
    stated_weight: Optional[Vector] = None
    inner_block: Optional[WeylWord] = None
    inner_indices: Tuple[int, ...] = ()
    notes: str = ''

    def __post_init__(self):
        for name in ('expected_drop', 'stated_weight'):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, el.as_vector(value))
        for letter in self.word:
            if not isinstance(letter, int) or not 1 <= letter <= \
                    self.label.rank:
                raise MissingWitnessRow(
                    f'Буква {letter!r} слова для {self.label} '
                    'не является простым индексом.')

    def expected_image(self, rs: RootSystem) -> Optional[Vector]:
        if self.expected_drop is None:
            return None
        return el.sub(rs.weights[self.facet_index - 1], self.expected_drop)


def _coefficients(rank: int, **terms) -> Vector:
    """_coefficients(4, a2=1, a3=2) -> α_2 + 2α_3 в ранге 4."""
    coords = [Fraction(0)] * rank
    for name, value in terms.items():
        coords[int(name[1:]) - 1] = Fraction(value)
    return tuple(coords)


def _ones(rank: int) -> Vector:
    return (Fraction(1),) * rank


def witness_row(label: TypeLabel) -> WitnessRow:
    family, n = label.family, label.rank
    if family == 'B' and n >= 4:
        return WitnessRow(
            label=label, facet_index=1, hyperplane_index=1,
            word=WeylWord((1,)),
            expected_drop=_coefficients(n, a1=1),
            stated_weight=_ones(n),
        )
    if family == 'D':
        return WitnessRow(
            label=label, facet_index=1, hyperplane_index=1,
            word=WeylWord((1,)),
            expected_drop=_coefficients(n, a1=1),
            stated_weight=_ones(n),
            notes='ω_1 в таблице записан как α_1 + … + α_n',
        )
    if label == TypeLabel('E', 6):
        return WitnessRow(
            label=label, facet_index=1, hyperplane_index=2,
            word=WeylWord((2, 4, 3, 1)),
            expected_drop=_coefficients(6, a1=1, a2=1, a3=1, a4=1),
            notes='k = 2 не входит в H_Φ = {1, 6}',
        )
    if label == TypeLabel('E', 7):
        return WitnessRow(
            label=label, facet_index=7, hyperplane_index=1,
            word=WeylWord((1, 3, 4, 5, 6, 7)),
            expected_drop=_coefficients(
                7, a1=1, a3=1, a4=1, a5=1, a6=1, a7=1),
        )
    if label == TypeLabel('E', 8):
        # знаки итогового выражения в таблице перепутаны, здесь исправлены
        return WitnessRow(
            label=label, facet_index=1, hyperplane_index=8,
            word=E8_WORD,
            expected_drop=(2, 2, 3, 4, 3, 2, 2, 2),
            stated_weight=(4, 5, 7, 10, 8, 6, 4, 2),
            inner_block=E8_INNER_BLOCK,
            inner_indices=(1, 2, 3, 4, 5, 6),
            notes='знаки итогового выражения исправлены',
        )
    if label == TypeLabel('F', 4):
        return WitnessRow(
            label=label, facet_index=4, hyperplane_index=4,
            word=WeylWord((4, 3, 2, 3, 4)),
            expected_drop=_coefficients(4, a2=1, a3=2, a4=2),
        )
    raise MissingWitnessRow(f'Для {label} строки в таблице нет.')
