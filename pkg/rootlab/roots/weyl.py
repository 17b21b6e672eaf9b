"""Группа Вейля: отражения, слова, множества инверсий и орбиты."""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import (Dict, Iterable, Iterator, List, Optional, Sequence,
                    Tuple, Union)

from . import exactlin as el
from .conf import rootlab_settings
from .exactlin import Vector
from .exceptions import NonSimpleLetter, NotARoot, RankTooLarge, RootLabError
from .rootsys import RootSystem, check_index, coroot_coordinates, leq_coroot

logger = logging.getLogger(__name__)

Letter = Union[int, Vector]


@dataclass(frozen=True)
class WeylWord:
    """Слово s_{β_1}⋯s_{β_k}; буква: номер простого корня или сам корень."""
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(
            letter if isinstance(letter, int) else el.as_vector(letter)
            for letter in self.letters
        ))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        if not self.letters:
            return 'e'
        return ''.join(
            f's{letter}' if isinstance(letter, int)
            else f's[{",".join(el.format_vector(letter))}]'
            for letter in self.letters
        )

    def inverse(self) -> 'WeylWord':
        return WeylWord(tuple(reversed(self.letters)))

    def suffix(self, h: int) -> 'WeylWord':
        """w_h = s_{β_h}⋯s_{β_k} при нумерации h с единицы."""
        return WeylWord(self.letters[h - 1:])

    def is_simple(self) -> bool:
        return all(isinstance(letter, int) for letter in self.letters)

    @classmethod
    def parse(cls, text: str) -> 'WeylWord':
        text = text.strip()
        if not text or text == 'e':
            return cls()
        return cls(tuple(int(part) for part in text.replace(
            's', ' ').replace(',', ' ').split()))


def word_roots(rs: RootSystem, word: WeylWord) -> List[Vector]:
    roots = []
    for letter in word:
        if isinstance(letter, int):
            if not 1 <= letter <= rs.rank:
                raise NotARoot(
                    f'Буква {letter} не является простым корнем {rs.label}.')
            roots.append(el.unit_vector(rs.rank, letter - 1))
        else:
            if not rs.is_root(letter):
                raise NotARoot(f'{el.format_vector(letter)} не корень.')
            roots.append(letter)
    return roots


def reflect(rs: RootSystem, beta: Vector, x: Vector) -> Vector:
    """s_β(x) = x - (x, β^∨)β."""
    beta = tuple(beta)
    if not rs.is_root(beta):
        raise NotARoot(f'{el.format_vector(beta)} не корень {rs.label}.')
    return _reflect(rs, beta, x)


def _reflect(rs: RootSystem, beta: Vector, x: Vector) -> Vector:
    pairing = rs.coroot_pairing(x, beta)
    if pairing == 0:
        return tuple(x)
    return el.sub(x, el.scale(pairing, beta))


def _apply_roots(rs: RootSystem, roots: Sequence[Vector], x: Vector) -> Vector:
    for beta in reversed(roots):
        x = _reflect(rs, beta, x)
    return tuple(x)


def apply_word(rs: RootSystem, word: WeylWord, x: Vector) -> Vector:
    """w(x) для w = s_{β_1}∘⋯∘s_{β_k}: первой действует последняя буква."""
    return _apply_roots(rs, word_roots(rs, word), el.as_vector(x))


def expansion_nu_eta(rs: RootSystem,
                     word: WeylWord) -> Tuple[List[Vector], List[Vector]]:
    """Корни ν_i = s_{β_1}⋯s_{β_{i-1}}(β_i) и η_i = s_{β_k}⋯s_{β_{i+1}}(β_i)."""
    betas = word_roots(rs, word)
    nu = [_apply_roots(rs, betas[:i], beta) for i, beta in enumerate(betas)]
    eta = []
    for i, beta in enumerate(betas):
        image = beta
        for later in betas[i + 1:]:
            image = _reflect(rs, later, image)
        eta.append(image)
    return nu, eta


def product_expansions(rs: RootSystem, word: WeylWord,
                       x: Vector) -> Dict[str, Vector]:
    """Правые части формул для w(x) через ν_i и η_i."""
    x = el.as_vector(x)
    betas = word_roots(rs, word)
    nu, eta = expansion_nu_eta(rs, word)
    n = rs.rank

    def combination(coefficients, vectors):
        return el.sub(x, el.vector_sum(
            (el.scale(c, v) for c, v in zip(coefficients, vectors)), n))

    return {
        'base': combination(
            [rs.coroot_pairing(x, b) for b in betas], nu),
        'base_dual': combination(
            [rs.pair(x, b) for b in betas], [rs.coroot(v) for v in nu]),
        'duale': combination(
            [rs.coroot_pairing(x, e) for e in eta], betas),
        'duale_dual': combination(
            [rs.pair(x, e) for e in eta], [rs.coroot(b) for b in betas]),
    }


def suffix_expansion(rs: RootSystem, word: WeylWord, h: int,
                     x: Vector) -> Vector:
    """w_h(x) = x - Σ_{i≥h} (x, η_i^∨)β_i."""
    x = el.as_vector(x)
    betas = word_roots(rs, word)
    _, eta = expansion_nu_eta(rs, word)
    terms = (
        el.scale(rs.coroot_pairing(x, eta[i]), betas[i])
        for i in range(h - 1, len(betas))
    )
    return el.sub(x, el.vector_sum(terms, rs.rank))


def check_product_formulas(rs: RootSystem, word: WeylWord, x: Vector) -> bool:
    expected = apply_word(rs, word, x)
    if any(value != expected
           for value in product_expansions(rs, word, x).values()):
        return False
    return all(
        suffix_expansion(rs, word, h, x) == apply_word(rs, word.suffix(h), x)
        for h in range(1, len(word) + 1)
    )


@dataclass(frozen=True)
class InversionSet:
    roots: Tuple[Vector, ...]
    reduced: bool
    reduced_word: WeylWord

    def __contains__(self, beta):
        return tuple(beta) in self.roots

    def __len__(self):
        return len(self.roots)


def _check_simple_word(rs: RootSystem, word: WeylWord):
    for letter in word:
        if not isinstance(letter, int) or not 1 <= letter <= rs.rank:
            raise NonSimpleLetter(
                f'Буква {letter!r} не является простым отражением.')


def _first_bad_position(rs: RootSystem, word: WeylWord) -> Optional[int]:
    nu, _ = expansion_nu_eta(rs, word)
    seen = set()
    for h, root in enumerate(nu):
        if sum(root) < 0 or root in seen:
            return h
        seen.add(root)
    return None


def reduce_word(rs: RootSystem, word: WeylWord) -> WeylWord:
    """Приведённое слово того же элемента по свойству удаления."""
    _check_simple_word(rs, word)
    letters = list(word.letters)
    while True:
        h = _first_bad_position(rs, WeylWord(letters))
        if h is None:
            return WeylWord(letters)
        # ищем i < h, при котором s_{β_{i+1}}⋯s_{β_{h-1}}(α_{β_h}) = α_{β_i}
        image = el.unit_vector(rs.rank, letters[h] - 1)
        for i in range(h - 1, -1, -1):
            if image == el.unit_vector(rs.rank, letters[i] - 1):
                del letters[h]
                del letters[i]
                break
            image = simple_image(rs, letters[i], image)
        else:
            raise RootLabError(f'Не удалось сократить слово {word}.')


def simple_image(rs: RootSystem, i: int, x: Vector) -> Vector:
    return _reflect(rs, el.unit_vector(rs.rank, i - 1), x)


def inversion_set(rs: RootSystem, word: WeylWord) -> InversionSet:
    """N(w) = {γ ∈ Φ⁺ : w⁻¹(γ) < 0}."""
    _check_simple_word(rs, word)
    reduced = _first_bad_position(rs, word) is None
    reduced_word = word if reduced else reduce_word(rs, word)
    nu, _ = expansion_nu_eta(rs, reduced_word)
    return InversionSet(
        roots=tuple(sorted(nu)), reduced=reduced, reduced_word=reduced_word)


def inversion_set_by_definition(rs: RootSystem,
                                word: WeylWord) -> Tuple[Vector, ...]:
    inverse = word.inverse()
    return tuple(sorted(
        gamma for gamma in rs.positive_roots
        if sum(apply_word(rs, inverse, gamma)) < 0
    ))


@dataclass(frozen=True)
class Orbit:
    points: Tuple[Vector, ...]
    base_point: Vector
    generators: Tuple[int, ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.points)

    def __contains__(self, x):
        return tuple(x) in set(self.points)

    def total(self) -> Vector:
        return el.vector_sum(self.points, len(self.base_point))


def _generator_indices(rs: RootSystem,
                       generators: Optional[Iterable[int]]) -> Tuple[int, ...]:
    if generators is None:
        return rs.simple_indices
    return tuple(sorted(set(check_index(rs, i) for i in generators)))


def orbit_words(rs: RootSystem, x: Vector,
                generators: Optional[Iterable[int]] = None
                ) -> Dict[Vector, WeylWord]:
    """Обход в ширину: для каждой точки орбиты слово кратчайшей длины."""
    x = el.as_vector(x)
    indices = _generator_indices(rs, generators)
    words = {x: WeylWord()}
    queue = deque([x])
    while queue:
        point = queue.popleft()
        for i in indices:
            image = simple_image(rs, i, point)
            if image not in words:
                words[image] = WeylWord((i,) + words[point].letters)
                queue.append(image)
    return words


def orbit(rs: RootSystem, x: Vector,
          generators: Optional[Iterable[int]] = None) -> Orbit:
    x = el.as_vector(x)
    indices = _generator_indices(rs, generators)
    points = tuple(sorted(orbit_words(rs, x, indices)))
    logger.debug('Орбита %s в %s: %d точек',
                  el.format_vector(x), rs.label, len(points))
    return Orbit(points=points, base_point=x, generators=indices)


def stabilizer_generators(rs: RootSystem, x: Vector) -> List[Vector]:
    """Положительные корни β с (x, β) = 0; их отражения порождают stab_W(x)."""
    return [beta for beta in rs.positive_roots if rs.pair(x, beta) == 0]


def stabilizer_simple_indices(rs: RootSystem, x: Vector) -> List[int]:
    """Простые α_i с (x, α_i) = 0; для доминантного x порождают stab_W(x)."""
    return [i for i in rs.simple_indices
            if rs.pair(x, rs.simple_root(i)) == 0]


def is_dominant(rs: RootSystem, x: Vector) -> bool:
    return all(rs.pair(x, rs.simple_root(i)) >= 0 for i in rs.simple_indices)


def theta_perp_indices(rs: RootSystem) -> List[int]:
    """Индексы Π ∩ θ^⊥; они порождают W₀ = stab_W(θ)."""
    return stabilizer_simple_indices(rs, rs.theta)


def q_index(rs: RootSystem, j: int) -> int:
    """q_j = [W₀ : W₀^j] как размер W₀-орбиты ω_j^∨."""
    check_index(rs, j)
    return len(orbit(rs, rs.coweights[j - 1], theta_perp_indices(rs)))


def weyl_group_elements(rs: RootSystem) -> List[WeylWord]:
    """Все элементы W приведёнными словами (только для малых рангов)."""
    if rs.rank > rootlab_settings.FULL_GROUP_MAX_RANK:
        raise RankTooLarge(
            f'Перечисление всей группы {rs.label} не поддерживается.')
    regular = el.vector_sum(rs.coweights, rs.rank)
    words = orbit_words(rs, regular)
    return sorted(words.values(), key=lambda w: (len(w), w.letters))


def minimal_coset_representatives(
        rs: RootSystem, j: int) -> List[Tuple[WeylWord, Vector]]:
    """Минимальные представители W/W^j и образы ω_j^∨."""
    check_index(rs, j)
    words = orbit_words(rs, rs.coweights[j - 1])
    return sorted(
        ((word, point) for point, word in words.items()),
        key=lambda item: (len(item[0]), item[0].letters)
    )


def check_coset_minimality(rs: RootSystem, j: int,
                           word: WeylWord) -> Dict[str, bool]:
    """Свойства минимального представителя w смежного класса wW^j."""
    omega = rs.coweights[j - 1]
    inversions = inversion_set(rs, word)
    _, eta = expansion_nu_eta(rs, word)
    betas = word_roots(rs, word)
    checks = {
        'reduced': inversions.reduced,
        'ends_with_alpha_j': not word or word.letters[-1] == j,
        'eta_in_M_alpha_j': all(e[j - 1] >= 1 for e in eta),
    }
    suffix_bounds = []
    for h in range(1, len(word) + 1):
        bound = el.sub(omega, el.vector_sum(
            (rs.coroot(b) for b in betas[h - 1:]), rs.rank))
        image = apply_word(rs, word.suffix(h), omega)
        suffix_bounds.append(leq_coroot(rs, image, bound))
    checks['suffix_bounds'] = all(suffix_bounds)
    if word:
        image = apply_word(rs, word, omega)
        checks['below_omega_minus_coroot'] = leq_coroot(
            rs, image, el.sub(omega, rs.simple_coroot(j)))
    return checks


def coroot_gap(rs: RootSystem, x: Vector, y: Vector) -> Vector:
    return coroot_coordinates(rs, el.sub(y, x))


def orbit_pairings(rs: RootSystem, points: Iterable[Vector],
                   direction: Vector) -> List[Fraction]:
    return [rs.pair(point, direction) for point in points]
