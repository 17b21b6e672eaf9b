"""Многогранник корней P и полярный многогранник P*."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from roots import exactlin as el
from roots.conf import rootlab_settings
from roots.exactlin import Vector
from roots.exceptions import (NotAFacetIndex, RankTooLargeForFullArrangement,
                              RootLabError, ZeroVector)
from roots.rootsys import RootSystem, check_index
from roots.weyl import orbit, simple_image

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Halfspace:
    """Полупространство (normal, x) ≤ offset."""
    normal: Vector
    offset: Fraction

    def dedup_key(self):
        canonical = el.canonical_normal(self.normal)
        k = next(i for i, c in enumerate(canonical) if c)
        factor = self.normal[k] / canonical[k]
        return canonical, factor > 0, self.offset / abs(factor)


@dataclass(frozen=True)
class HPolytope:
    halfspaces: Tuple[Halfspace, ...]
    rs: RootSystem

    def values(self, x: Vector) -> List[Fraction]:
        return [self.rs.pair(h.normal, x) for h in self.halfspaces]

    def contains(self, x: Vector) -> bool:
        return all(value <= h.offset
                   for value, h in zip(self.values(x), self.halfspaces))

    def saturated(self, x: Vector) -> List[Halfspace]:
        return [h for value, h in zip(self.values(x), self.halfspaces)
                if value == h.offset]

    def is_vertex(self, x: Vector) -> bool:
        """x лежит в P* и насыщает n линейно независимых неравенств."""
        if not self.contains(x):
            return False
        rows = [el.mat_vec(self.rs.gram, h.normal) for h in self.saturated(x)]
        return el.matrix_rank(rows) == self.rs.rank


def deduplicate(halfspaces: Iterable[Halfspace]) -> Tuple[Halfspace, ...]:
    seen = set()
    unique = []
    for halfspace in halfspaces:
        key = halfspace.dedup_key()
        if key not in seen:
            seen.add(key)
            unique.append(halfspace)
    return tuple(unique)


def polar_hrep(rs: RootSystem) -> HPolytope:
    """P* = {x : (β, x) ≤ 1 для всех длинных β}."""
    halfspaces = deduplicate(
        Halfspace(beta, Fraction(1)) for beta in rs.long_roots)
    return HPolytope(halfspaces=halfspaces, rs=rs)


def polar_vertices(rs: RootSystem) -> Tuple[Vector, ...]:
    """Объединение W-орбит вершин альковы o_1, …, o_n."""
    points = set()
    for vertex in rs.alcove_vertices:
        points.update(orbit(rs, vertex))
    logger.debug('P* для %s: %d вершин', rs.label, len(points))
    return tuple(sorted(points))


def genuine_vertices(rs: RootSystem) -> Tuple[Vector, ...]:
    """Точки polar_vertices, насыщающие n независимых неравенств P*.

    Это W-орбиты o_i для i из standard_facet_indices; прочие o_i лежат
    внутри граней P* большей размерности (например, o_1 для C_n).
    """
    hrep = polar_hrep(rs)
    return tuple(x for x in polar_vertices(rs) if hrep.is_vertex(x))


def support_value(rs: RootSystem, x: Vector) -> Fraction:
    """max (β, x) по длинным корням β."""
    return max(rs.pair(beta, x) for beta in rs.long_roots)


def is_w_stable(rs: RootSystem, points: Iterable[Vector]) -> bool:
    points = set(points)
    return all(
        simple_image(rs, i, x) in points
        for i in rs.simple_indices for x in points
    )


def is_centrally_symmetric(points: Iterable[Vector]) -> bool:
    points = set(points)
    return all(el.neg(x) in points for x in points)


def extended_dynkin_graph(rs: RootSystem) -> nx.Graph:
    """Расширенная диаграмма Дынкина; узел 0 отвечает корню -θ."""
    graph = nx.Graph()
    graph.add_nodes_from(range(rs.rank + 1))
    for i in rs.simple_indices:
        for j in range(i + 1, rs.rank + 1):
            if rs.gram[i - 1][j - 1] != 0:
                graph.add_edge(i, j)
        if rs.pair(rs.theta, rs.simple_root(i)) != 0:
            graph.add_edge(0, i)
    return graph


def standard_facet_indices(rs: RootSystem) -> List[int]:
    """Индексы i, для которых F_i является гипергранью: диаграмма связна без α_i."""
    graph = extended_dynkin_graph(rs)
    return [
        i for i in rs.simple_indices
        if nx.is_connected(graph.subgraph(n for n in graph if n != i))
    ]


@dataclass(frozen=True)
class Face:
    indices: Tuple[int, ...]
    vertex_roots: Tuple[Vector, ...]
    barycenter: Vector


@dataclass(frozen=True)
class Facet:
    index: int
    vertex_roots: Tuple[Vector, ...]
    barycenter: Vector
    weight_multiple: Fraction


def parabolic_face(rs: RootSystem, indices: Iterable[int]) -> Face:
    """F_I = conv{α ∈ Φ⁺ : (ω_i^∨, α) = m_i для всех i ∈ I}."""
    indices = tuple(sorted(set(check_index(rs, i) for i in indices)))
    vertex_roots = tuple(
        alpha for alpha in rs.positive_roots
        if all(alpha[i - 1] == rs.m[i - 1] for i in indices)
    )
    barycenter = el.scale(
        Fraction(1, len(vertex_roots)),
        el.vector_sum(vertex_roots, rs.rank)
    )
    return Face(indices=indices, vertex_roots=vertex_roots,
                barycenter=barycenter)


def proportionality(x: Vector, y: Vector) -> Optional[Fraction]:
    """c с x = c·y, либо None."""
    k = next((i for i, value in enumerate(y) if value), None)
    if k is None:
        return None
    c = x[k] / y[k]
    return c if el.scale(c, y) == tuple(x) else None


def standard_facet(rs: RootSystem, i: int) -> Facet:
    check_index(rs, i)
    if i not in standard_facet_indices(rs):
        raise NotAFacetIndex(f'F_{i} не является гипергранью в {rs.label}.')
    face = parabolic_face(rs, (i,))
    multiple = proportionality(face.barycenter, rs.weights[i - 1])
    if multiple is None or multiple <= 0:
        raise RootLabError(
            f'Барицентр F_{i} не пропорционален ω_{i} в {rs.label}.')
    return Facet(index=i, vertex_roots=face.vertex_roots,
                 barycenter=face.barycenter, weight_multiple=multiple)


def standard_hyperplane_indices(rs: RootSystem) -> List[int]:
    """H_Φ: номера k стандартных гиперплоскостей (ω_k^∨)^⊥."""
    n, family = rs.rank, rs.family
    if family in ('A', 'C', 'G'):
        return [1]
    if family == 'B':
        return {2: [2], 3: [3]}.get(n, [1, n])
    if family == 'D':
        return [1, n - 1, n]
    if family == 'E':
        return {6: [1, 6], 7: [1, 2], 8: [2, 8]}[n]
    return [4]


@dataclass(frozen=True)
class Arrangement:
    standard_indices: Tuple[int, ...]
    normals: Tuple[Vector, ...]

    def __contains__(self, normal):
        return el.canonical_normal(tuple(normal)) in set(self.normals)

    def __len__(self):
        return len(self.normals)


def arrangement_normals(
        rs: RootSystem,
        standard_indices: Optional[Sequence[int]] = None) -> Arrangement:
    """Нормали гиперплоскостей w(ω_k^∨)^⊥, w ∈ W, k ∈ H_Φ, с точностью до знака."""
    if rs.rank > rootlab_settings.ARRANGEMENT_MAX_RANK:
        raise RankTooLargeForFullArrangement(
            f'Полное перечисление H_P для {rs.label} не выполняется.')
    if standard_indices is None:
        standard_indices = standard_hyperplane_indices(rs)
    standard_indices = tuple(sorted(
        set(check_index(rs, k) for k in standard_indices)))
    normals = set()
    for k in standard_indices:
        normals.update(
            el.canonical_normal(x) for x in orbit(rs, rs.coweights[k - 1]))
    return Arrangement(standard_indices=standard_indices,
                       normals=tuple(sorted(normals)))


@dataclass(frozen=True)
class CutWitness:
    normal: Vector
    facet_index: int
    barycenter_pairing: Fraction
    positive: Tuple[Vector, ...]
    negative: Tuple[Vector, ...]
    on_hyperplane: Tuple[Vector, ...]

    @property
    def through_barycenter(self) -> bool:
        return self.barycenter_pairing == 0

    @property
    def mixed_signs(self) -> bool:
        return bool(self.positive) and bool(self.negative)

    @property
    def cuts(self) -> bool:
        return self.through_barycenter and self.mixed_signs


def hyperplane_cuts_facet(rs: RootSystem, normal: Vector,
                          facet: Facet) -> CutWitness:
    """Пересекает ли normal^⊥ относительную внутренность гиперграни."""
    normal = el.as_vector(normal)
    if el.is_zero(normal):
        raise ZeroVector('Нормаль гиперплоскости не может быть нулевой.')
    signs = {1: [], -1: [], 0: []}
    for alpha in facet.vertex_roots:
        value = rs.pair(normal, alpha)
        signs[(value > 0) - (value < 0)].append(alpha)
    return CutWitness(
        normal=normal,
        facet_index=facet.index,
        barycenter_pairing=rs.pair(normal, facet.barycenter),
        positive=tuple(signs[1]),
        negative=tuple(signs[-1]),
        on_hyperplane=tuple(signs[0]),
    )


def cutting_pairs(rs: RootSystem) -> List[CutWitness]:
    """Все пары (нормаль H_P, стандартная гипергрань), дающие разрез.

    Множество нормалей W-инвариантно, поэтому достаточно стандартных F_i.
    """
    arrangement = arrangement_normals(rs)
    facets = [standard_facet(rs, i) for i in standard_facet_indices(rs)]
    witnesses = []
    for facet in facets:
        for normal in arrangement.normals:
            witness = hyperplane_cuts_facet(rs, normal, facet)
            if witness.cuts:
                witnesses.append(witness)
    return witnesses
