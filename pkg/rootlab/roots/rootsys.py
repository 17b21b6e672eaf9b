"""Неприводимые кристаллографические системы корней в нумерации Бурбаки.

Все векторы задаются координатами в базисе простых корней, форма ( , )
хранится матрицей Грама, длинные корни нормированы условием (β, β) = 2.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Tuple

from . import exactlin as el
from .exactlin import Matrix, Vector
from .exceptions import IndexOutOfRange, InvalidRank, RootLabError

logger = logging.getLogger(__name__)

FAMILIES = ('A', 'B', 'C', 'D', 'E', 'F', 'G')
WEIGHT = 'weight'
COWEIGHT = 'coweight'


def is_admissible(family: str, rank: int) -> bool:
    return {
        'A': rank >= 1,
        'B': rank >= 2,
        'C': rank >= 2,
        'D': rank >= 4,
        'E': rank in (6, 7, 8),
        'F': rank == 4,
        'G': rank == 2,
    }.get(family, False)


@dataclass(frozen=True, order=True)
class TypeLabel:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidRank(f'Неизвестная серия {self.family!r}.')
        if not isinstance(self.rank, int) or not is_admissible(
                self.family, self.rank):
            raise InvalidRank(
                f'Ранг {self.rank} недопустим для серии {self.family}.')

    def __str__(self):
        return f'{self.family}{self.rank}'

    @classmethod
    def parse(cls, text: str) -> 'TypeLabel':
        text = text.strip().upper()
        try:
            return cls(text[0], int(text[1:]))
        except (IndexError, ValueError):
            raise InvalidRank(f'Не удалось разобрать тип {text!r}.')


def dynkin_data(label: TypeLabel) -> Tuple[Tuple[Fraction, ...],
                                           Tuple[Tuple[int, int], ...]]:
    """Квадраты длин простых корней и рёбра диаграммы (нумерация с 1)."""
    n = label.rank
    long_, short = Fraction(2), Fraction(1)
    chain = tuple((i, i + 1) for i in range(1, n))
    if label.family == 'A':
        return (long_,) * n, chain
    if label.family == 'B':
        return (long_,) * (n - 1) + (short,), chain
    if label.family == 'C':
        return (short,) * (n - 1) + (long_,), chain
    if label.family == 'D':
        edges = tuple((i, i + 1) for i in range(1, n - 1)) + ((n - 2, n),)
        return (long_,) * n, edges
    if label.family == 'E':
        edges = ((1, 3), (3, 4), (2, 4)) + tuple(
            (i, i + 1) for i in range(4, n))
        return (long_,) * n, edges
    if label.family == 'F':
        return (long_, long_, short, short), chain
    return (Fraction(2, 3), long_), chain


def gram_matrix(label: TypeLabel) -> Matrix:
    """Матрица Грама при (θ, θ) = 2.

    Для соседних узлов (α_i, α_j) = -max(‖α_i‖², ‖α_j‖²)/2.
    """
    lengths, edges = dynkin_data(label)
    n = label.rank
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = lengths[i]
    for i, j in edges:
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = -max(
            lengths[i - 1], lengths[j - 1]) / 2
    return el.as_matrix(rows)


def _height(x: Vector) -> Fraction:
    return sum(x, Fraction(0))


def root_order_key(x: Vector):
    return (_height(x), x)


def simple_reflection(gram: Matrix, i: int, x: Vector) -> Vector:
    """s_{α_i}(x) при нумерации i с нуля."""
    pairing = el.dot(gram[i], x)
    if pairing == 0:
        return x
    coords = list(x)
    coords[i] -= 2 * pairing / gram[i][i]
    return tuple(coords)


def _reflection_closure(gram: Matrix) -> List[Vector]:
    n = len(gram)
    simple = [el.unit_vector(n, i) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        next_frontier = []
        for x in frontier:
            for i in range(n):
                y = simple_reflection(gram, i, x)
                if y not in found:
                    found.add(y)
                    next_frontier.append(y)
        frontier = next_frontier
    return sorted(found, key=root_order_key)


@dataclass(frozen=True)
class RootSystem:
    label: TypeLabel
    gram: Matrix
    roots: Tuple[Vector, ...]
    positive_roots: Tuple[Vector, ...]
    theta: Vector
    m: Tuple[int, ...]
    coweights: Tuple[Vector, ...]
    weights: Tuple[Vector, ...]
    alcove_vertices: Tuple[Vector, ...]
    _root_index: Dict[Vector, int] = field(
        default=None, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.label.rank

    @property
    def family(self) -> str:
        return self.label.family

    def pair(self, x: Vector, y: Vector) -> Fraction:
        return el.bilinear(self.gram, x, y)

    def norm2(self, x: Vector) -> Fraction:
        return self.pair(x, x)

    def simple_root(self, i: int) -> Vector:
        check_index(self, i)
        return el.unit_vector(self.rank, i - 1)

    def simple_coroot(self, i: int) -> Vector:
        return self.coroot(self.simple_root(i))

    def coroot(self, beta: Vector) -> Vector:
        return el.scale(2 / self.norm2(beta), beta)

    def coroot_pairing(self, x: Vector, beta: Vector) -> Fraction:
        """(x, β^∨) = 2(x, β)/(β, β)."""
        return 2 * self.pair(x, beta) / self.norm2(beta)

    def is_root(self, x: Vector) -> bool:
        return tuple(x) in self._root_index

    def root_index(self, x: Vector) -> int:
        return self._root_index[tuple(x)]

    def is_long(self, beta: Vector) -> bool:
        return self.norm2(beta) == 2

    @property
    def long_roots(self) -> Tuple[Vector, ...]:
        return tuple(beta for beta in self.roots if self.is_long(beta))

    @property
    def simple_indices(self) -> Tuple[int, ...]:
        return tuple(range(1, self.rank + 1))


def check_index(rs: RootSystem, i: int) -> int:
    if not isinstance(i, int) or not 1 <= i <= rs.rank:
        raise IndexOutOfRange(
            f'Индекс {i} вне диапазона 1..{rs.rank} для {rs.label}.')
    return i


def enumerate_roots(rs: RootSystem) -> List[Vector]:
    """Замыкание Π относительно простых отражений, по высоте и лексикографически."""
    return _reflection_closure(rs.gram)


def _highest(positive: Iterable[Vector]) -> Vector:
    positive = list(positive)
    top = max(positive, key=root_order_key)
    if any(beta != top and is_leq(top, beta) for beta in positive):
        raise RootLabError('Старший корень не единственен.')
    if not all(is_leq(beta, top) for beta in positive):
        raise RootLabError('Подсистема приводима: старшего корня нет.')
    return top


@lru_cache(maxsize=None)
def build_root_system(label: TypeLabel) -> RootSystem:
    gram = gram_matrix(label)
    n = label.rank
    roots = tuple(_reflection_closure(gram))
    positive = tuple(beta for beta in roots if _height(beta) > 0)
    theta = _highest(positive)
    m = tuple(int(c) for c in theta)
    coweights = tuple(
        el.solve_linear(gram, el.unit_vector(n, i)) for i in range(n))
    weights = tuple(
        el.solve_linear(gram, el.scale(gram[i][i] / 2, el.unit_vector(n, i)))
        for i in range(n)
    )
    alcove = tuple(
        el.scale(Fraction(1, m_i), omega) for m_i, omega in zip(m, coweights))
    logger.debug('Построена система %s: %d корней', label, len(roots))
    return RootSystem(
        label=label,
        gram=gram,
        roots=roots,
        positive_roots=positive,
        theta=theta,
        m=m,
        coweights=coweights,
        weights=weights,
        alcove_vertices=alcove,
        _root_index={beta: k for k, beta in enumerate(roots)},
    )


def root_system(family: str, rank: int) -> RootSystem:
    return build_root_system(TypeLabel(family.upper(), int(rank)))


def highest_root(rs: RootSystem) -> Tuple[Vector, List[int]]:
    return rs.theta, list(rs.m)


def dual_basis_vector(rs: RootSystem, kind: str, j: int) -> Vector:
    """ω_j^∨ при kind='coweight' и ω_j при kind='weight'."""
    check_index(rs, j)
    if kind == COWEIGHT:
        return rs.coweights[j - 1]
    if kind == WEIGHT:
        return rs.weights[j - 1]
    raise ValueError(f'Неизвестный вид вектора {kind!r}.')


def alcove_vertex(rs: RootSystem, i: int) -> Vector:
    check_index(rs, i)
    return rs.alcove_vertices[i - 1]


def length_ratio(rs: RootSystem, j: int) -> Fraction:
    """r_j = ‖θ‖² / ‖α_j‖²."""
    check_index(rs, j)
    return rs.norm2(rs.theta) / rs.gram[j - 1][j - 1]


def is_leq(x: Vector, y: Vector) -> bool:
    """x ≤ y: разность y - x есть неотрицательная целая комбинация Π."""
    difference = el.sub(y, x)
    return el.is_integral(difference) and all(c >= 0 for c in difference)


def coroot_coordinates(rs: RootSystem, x: Vector) -> Vector:
    """Координаты x в базисе простых кокорней α_i^∨."""
    return tuple(c * rs.gram[i][i] / 2 for i, c in enumerate(x))


def leq_coroot(rs: RootSystem, x: Vector, y: Vector) -> bool:
    """x ≤^∨ y относительно базиса Π^∨."""
    difference = coroot_coordinates(rs, el.sub(y, x))
    return el.is_integral(difference) and all(d >= 0 for d in difference)


def support(rs: RootSystem, gamma: Vector) -> FrozenSet[int]:
    return frozenset(i + 1 for i, c in enumerate(gamma) if c != 0)


def roots_with_support(rs: RootSystem, j: int) -> Tuple[Vector, ...]:
    """M_{α_j}: положительные корни, в носителе которых есть α_j."""
    check_index(rs, j)
    return tuple(g for g in rs.positive_roots if g[j - 1] != 0)


def parabolic_highest_root(rs: RootSystem, indices: Iterable[int]) -> Vector:
    """Старший корень стандартной параболической подсистемы Φ(Γ)."""
    indices = frozenset(check_index(rs, i) for i in indices)
    positive = [
        beta for beta in rs.positive_roots
        if support(rs, beta) <= indices
    ]
    return _highest(positive)
