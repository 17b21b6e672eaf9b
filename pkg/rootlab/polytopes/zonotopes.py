"""Зоноэдры ZT(S) и ZN_p(S): опорные функции, сертификаты, равенство с P*."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from roots import exactlin as el
from roots.conf import rootlab_settings
from roots.exactlin import Matrix, Vector
from roots.exceptions import (GeneratorSetTooLarge, IndexOutOfRange,
                              RootLabError, WrongType)
from roots.rootsys import RootSystem, TypeLabel, check_index, length_ratio
from roots.weyl import WeylWord, apply_word, orbit, q_index

from .simplex import feasible_point

logger = logging.getLogger(__name__)

TELESCOPING = 'telescoping'
SUBSET_SEARCH = 'subset-search'
LINEAR_PROGRAM = 'linear-program'


@dataclass(frozen=True)
class Zonotope:
    """ZT(S) = {Σ t_i v_i : 0 ≤ t_i ≤ 1}; center: центр p записи ZN_p(S)."""
    generators: Tuple[Vector, ...]
    center: Vector
    gram: Matrix

    @classmethod
    def from_generators(cls, generators, gram: Matrix) -> 'Zonotope':
        generators = tuple(el.as_vector(v) for v in generators)
        size = len(gram)
        center = el.scale(Fraction(1, 2), el.vector_sum(generators, size))
        return cls(generators=generators, center=center, gram=gram)

    @property
    def dimension(self) -> int:
        return len(self.gram)

    def pair(self, x: Vector, y: Vector) -> Fraction:
        return el.bilinear(self.gram, x, y)

    def is_centered_at_origin(self) -> bool:
        return el.is_zero(self.center)


def orbit_zonotope(rs: RootSystem, j: int, c=1) -> Zonotope:
    """ZT(W·c·ω_j^∨)."""
    check_index(rs, j)
    base = el.scale(c, rs.coweights[j - 1])
    return Zonotope.from_generators(orbit(rs, base).points, rs.gram)


@dataclass(frozen=True)
class SumCertificate:
    target: Vector
    subset: Tuple[int, ...]
    method: str = SUBSET_SEARCH
    coefficients: Tuple[Fraction, ...] = ()

    def weights(self) -> Tuple[Fraction, ...]:
        return self.coefficients or (Fraction(1),) * len(self.subset)

    def verify(self, zonotope: Zonotope) -> bool:
        """Σ t_i v_i = target, t_i ∈ [0, 1], индексы различны."""
        if len(set(self.subset)) != len(self.subset):
            return False
        weights = self.weights()
        if not all(0 <= t <= 1 for t in weights):
            return False
        chosen = (
            el.scale(t, zonotope.generators[i])
            for i, t in zip(self.subset, weights)
        )
        return el.vector_sum(chosen, zonotope.dimension) == self.target


def zt_support(zonotope: Zonotope, direction: Vector) -> Fraction:
    """max (x, d) по ZT(S) = Σ max(0, (v_i, d))."""
    return sum(
        (max(Fraction(0), zonotope.pair(v, direction))
         for v in zonotope.generators),
        Fraction(0)
    )


def brute_force_support(zonotope: Zonotope, direction: Vector) -> Fraction:
    """Тот же максимум перебором всех 2^|S| сумм подмножеств."""
    generators = zonotope.generators
    if len(generators) > rootlab_settings.BRUTE_FORCE_SUPPORT_MAX:
        raise GeneratorSetTooLarge(
            f'Перебор 2^{len(generators)} подмножеств не выполняется.')
    pairings = [zonotope.pair(v, direction) for v in generators]
    best = Fraction(0)
    for size in range(1, len(pairings) + 1):
        for subset in combinations(pairings, size):
            best = max(best, sum(subset, Fraction(0)))
    return best


@dataclass(frozen=True)
class Containment:
    contained: bool
    support: Fraction
    violating_root: Optional[Vector] = None


def contained_in_polar(rs: RootSystem, zonotope: Zonotope) -> Containment:
    """ZT(S) ⊆ P* тогда и только тогда, когда опорная функция ≤ 1 на длинных корнях."""
    best = Fraction(0)
    for beta in rs.long_roots:
        value = zt_support(zonotope, beta)
        best = max(best, value)
        if value > 1:
            return Containment(False, value, beta)
    return Containment(True, best)


def subset_sum_certificate(zonotope: Zonotope,
                           target: Vector) -> Optional[SumCertificate]:
    """Первое в каноническом порядке подмножество S с суммой target."""
    generators = zonotope.generators
    if len(generators) > rootlab_settings.SUBSET_SUM_MAX_GENERATORS:
        raise GeneratorSetTooLarge(
            f'Поиск подмножеств среди {len(generators)} образующих '
            'не выполняется.')
    target = el.as_vector(target)
    indices = range(len(generators))
    for size in range(len(generators) + 1):
        for subset in combinations(indices, size):
            total = el.vector_sum(
                (generators[i] for i in subset), zonotope.dimension)
            if total == target:
                return SumCertificate(target=target, subset=subset)
    return None


def zt_membership_coefficients(zonotope: Zonotope,
                               point: Vector) -> Optional[List[Fraction]]:
    """Коэффициенты t ∈ [0, 1]^|S| с Σ t_i v_i = p, найденные точной ЛП."""
    k = len(zonotope.generators)
    if k > rootlab_settings.LP_MAX_GENERATORS:
        raise GeneratorSetTooLarge(
            f'Точная ЛП для {k} образующих не выполняется.')
    rows, rhs = [], []
    for c in range(zonotope.dimension):
        rows.append([v[c] for v in zonotope.generators] + [Fraction(0)] * k)
        rhs.append(Fraction(point[c]))
    for i in range(k):
        row = [Fraction(0)] * (2 * k)
        row[i] = row[k + i] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    solution = feasible_point(rows, rhs)
    if solution is None:
        return None
    return solution[:k]


def zt_membership(zonotope: Zonotope, point: Vector) -> bool:
    return zt_membership_coefficients(zonotope, el.as_vector(point)) is not None


def telescoping_words(k: int) -> List[WeylWord]:
    """w_0 = e, w_i = s_i⋯s_1."""
    return [WeylWord(tuple(range(i, 0, -1))) for i in range(k + 1)]


def telescoping_certificate(rs: RootSystem, k: int) -> List[Vector]:
    """[w_0(o_1), …, w_k(o_1)]: различные точки W·o_1 с суммой o_{k+1}."""
    if rs.family not in ('A', 'C'):
        raise WrongType(
            f'Телескопическая конструкция определена для A_n и C_n, '
            f'а не для {rs.label}.')
    if not isinstance(k, int) or not 0 <= k < rs.rank:
        raise IndexOutOfRange(f'k = {k} вне диапазона 0..{rs.rank - 1}.')
    o = (el.zero_vector(rs.rank),) + rs.alcove_vertices
    images = [apply_word(rs, w, o[1]) for w in telescoping_words(k)]
    for h, image in enumerate(images):
        if image != el.sub(o[h + 1], o[h]):
            raise RootLabError(
                f'w_{h}(o_1) != o_{h + 1} - o_{h} в {rs.label}.')
    if len(set(images)) != len(images):
        raise RootLabError(f'Точки w_i(o_1) в {rs.label} повторяются.')
    if el.vector_sum(images, rs.rank) != o[k + 1]:
        raise RootLabError(f'Сумма w_i(o_1) не равна o_{k + 1}.')
    return images


def scale_threshold(rs: RootSystem, j: int) -> Optional[Fraction]:
    """1/(q_j m_j) при r_j = m_j, иначе None."""
    check_index(rs, j)
    if length_ratio(rs, j) != rs.m[j - 1]:
        return None
    return Fraction(1, q_index(rs, j) * rs.m[j - 1])


def _generator_index(zonotope: Zonotope) -> Dict[Vector, int]:
    return {v: i for i, v in enumerate(zonotope.generators)}


@dataclass
class EqualityReport:
    label: str
    j: int
    scale: Fraction
    generator_count: int
    containment: Containment
    certificates: Dict[int, SumCertificate] = field(default_factory=dict)
    missing: List[int] = field(default_factory=list)
    threshold: Optional[Fraction] = None

    @property
    def reverse_inclusion(self) -> bool:
        return not self.missing

    @property
    def equal(self) -> bool:
        return self.containment.contained and self.reverse_inclusion


def _telescoping_certificates(rs: RootSystem,
                              zonotope: Zonotope) -> Dict[int, SumCertificate]:
    index = _generator_index(zonotope)
    certificates = {}
    for k in range(rs.rank):
        images = telescoping_certificate(rs, k)
        if not all(image in index for image in images):
            return {}
        certificates[k + 1] = SumCertificate(
            target=rs.alcove_vertices[k],
            subset=tuple(index[image] for image in images),
            method=TELESCOPING,
        )
    return certificates


def _vertex_certificate(zonotope: Zonotope,
                        target: Vector) -> Optional[SumCertificate]:
    if len(zonotope.generators) <= \
            rootlab_settings.SUBSET_SUM_MAX_GENERATORS:
        certificate = subset_sum_certificate(zonotope, target)
        if certificate is not None:
            return certificate
    coefficients = zt_membership_coefficients(zonotope, target)
    if coefficients is None:
        return None
    support = tuple(i for i, t in enumerate(coefficients) if t)
    return SumCertificate(
        target=target, subset=support, method=LINEAR_PROGRAM,
        coefficients=tuple(coefficients[i] for i in support),
    )


def zt_equals_polar(rs: RootSystem, j: int, c) -> EqualityReport:
    """Проверка P* = ZT(W·c·ω_j^∨): прямое включение и сертификаты для o_i."""
    c = el.as_rational(c)
    zonotope = orbit_zonotope(rs, j, c)
    report = EqualityReport(
        label=str(rs.label), j=j, scale=c,
        generator_count=len(zonotope.generators),
        containment=contained_in_polar(rs, zonotope),
        threshold=scale_threshold(rs, j),
    )
    if rs.family in ('A', 'C') and j == 1:
        report.certificates.update(_telescoping_certificates(rs, zonotope))
    for i, vertex in enumerate(rs.alcove_vertices, start=1):
        if i in report.certificates:
            continue
        certificate = _vertex_certificate(zonotope, vertex)
        if certificate is None:
            report.missing.append(i)
        else:
            report.certificates[i] = certificate
    logger.info('ZT(W·%s·ω_%d^∨) и P* для %s: %s', el.format_rational(c), j,
                rs.label, 'равны' if report.equal else 'не равны')
    return report


def theta_level_count(rs: RootSystem, j: int) -> int:
    """|{x ∈ W·ω_j^∨ : (x, θ) = m_j}|."""
    check_index(rs, j)
    return sum(
        1 for x in orbit(rs, rs.coweights[j - 1])
        if rs.pair(x, rs.theta) == rs.m[j - 1]
    )


def congruence_holds(rs: RootSystem, j: int) -> bool:
    """(β, ω_j^∨) ≡ m_j (mod r_j) для каждого длинного β."""
    check_index(rs, j)
    modulus = length_ratio(rs, j)
    return all(
        (beta[j - 1] - rs.m[j - 1]) % modulus == 0
        for beta in rs.long_roots
    )


def sign_gap_holds(rs: RootSystem, j: int) -> bool:
    """При r_j = m_j: (x, θ) ≠ m_j влечёт (x, θ) ≤ 0 на W·ω_j^∨."""
    check_index(rs, j)
    m_j = rs.m[j - 1]
    return all(
        value == m_j or value <= 0
        for value in (rs.pair(x, rs.theta)
                      for x in orbit(rs, rs.coweights[j - 1]))
    )


def generator_scale(rs: RootSystem) -> Optional[Tuple[int, Fraction]]:
    """(j, c), при которых P* = ZT(W·c·ω_j^∨), либо None вне A, C, B3, G2."""
    if rs.family == 'A':
        return 1, Fraction(1)
    if rs.family == 'C':
        return 1, Fraction(1, 2)
    if rs.label == TypeLabel('B', 2):
        return 2, Fraction(1, 2)
    if rs.label == TypeLabel('B', 3):
        return 3, Fraction(1, 4)
    if rs.label == TypeLabel('G', 2):
        return 1, Fraction(1, 6)
    return None
