"""Точный симплекс-метод (первая фаза) с правилом Бленда."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


class PhaseOneTableau:
    """Таблица вспомогательной задачи min Σ a_r при A·x + a = b, x, a ≥ 0."""

    def __init__(self, rows: Sequence[Sequence[Fraction]],
                 rhs: Sequence[Fraction]):
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.width = self.n + self.m
        self.rows: List[List[Fraction]] = []
        self.rhs: List[Fraction] = []
        for r, (row, b) in enumerate(zip(rows, rhs)):
            sign = -1 if b < 0 else 1
            artificial = [Fraction(int(r == k)) for k in range(self.m)]
            self.rows.append([sign * Fraction(a) for a in row] + artificial)
            self.rhs.append(sign * Fraction(b))
        self.basis = list(range(self.n, self.width))
        self.costs = [
            -sum((row[j] for row in self.rows), Fraction(0))
            if j < self.n else Fraction(0)
            for j in range(self.width)
        ]
        self.pivots = 0

    def objective(self) -> Fraction:
        return sum(
            (b for b, var in zip(self.rhs, self.basis) if var >= self.n),
            Fraction(0)
        )

    def pivot(self, r: int, j: int):
        factor = self.rows[r][j]
        self.rows[r] = [a / factor for a in self.rows[r]]
        self.rhs[r] /= factor
        for k in range(self.m):
            if k != r and self.rows[k][j]:
                f = self.rows[k][j]
                self.rows[k] = [
                    a - f * b for a, b in zip(self.rows[k], self.rows[r])]
                self.rhs[k] -= f * self.rhs[r]
        f = self.costs[j]
        self.costs = [a - f * b for a, b in zip(self.costs, self.rows[r])]
        self.basis[r] = j
        self.pivots += 1

    def step(self) -> bool:
        """Один шаг по правилу Бленда; False, когда достигнут оптимум."""
        entering = next(
            (j for j in range(self.width) if self.costs[j] < 0), None)
        if entering is None:
            return False
        candidates = [
            (self.rhs[r] / self.rows[r][entering], self.basis[r], r)
            for r in range(self.m) if self.rows[r][entering] > 0
        ]
        # вспомогательная задача ограничена снизу нулём
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return True

    def solve(self) -> Optional[List[Fraction]]:
        while self.step():
            pass
        logger.debug('Первая фаза: %d поворотов', self.pivots)
        if self.objective() != 0:
            return None
        solution = [Fraction(0)] * self.n
        for value, var in zip(self.rhs, self.basis):
            if var < self.n:
                solution[var] = value
        return solution


def feasible_point(rows: Sequence[Sequence[Fraction]],
                   rhs: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """Неотрицательное решение A·x = b или None, если его нет."""
    if not rows:
        return []
    return PhaseOneTableau(rows, rhs).solve()
