"""Точная рациональная линейная алгебра: векторы, матрицы, решение систем."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

from .exceptions import SingularMatrix, ZeroVector

Rational = Fraction
Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]
Number = Union[int, Fraction, str]


def as_rational(value: Number) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def as_vector(coords: Iterable[Number]) -> Vector:
    return tuple(as_rational(value) for value in coords)


def as_matrix(rows: Iterable[Iterable[Number]]) -> Matrix:
    return tuple(as_vector(row) for row in rows)


def zero_vector(size: int) -> Vector:
    return (Fraction(0),) * size


def unit_vector(size: int, index: int) -> Vector:
    """Базисный вектор e_index (нумерация с нуля)."""
    return tuple(Fraction(int(k == index)) for k in range(size))


def add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def scale(c: Number, x: Vector) -> Vector:
    c = as_rational(c)
    return tuple(c * a for a in x)


def vector_sum(vectors: Iterable[Vector], size: int) -> Vector:
    return reduce(add, vectors, zero_vector(size))


def dot(x: Vector, y: Vector) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def mat_vec(matrix: Matrix, x: Vector) -> Vector:
    return tuple(dot(row, x) for row in matrix)


def bilinear(matrix: Matrix, x: Vector, y: Vector) -> Fraction:
    """Значение формы (x, y) = x^T G y."""
    return dot(x, mat_vec(matrix, y))


def is_zero(x: Vector) -> bool:
    return all(a == 0 for a in x)


def is_integral(x: Vector) -> bool:
    return all(a.denominator == 1 for a in x)


def is_symmetric(matrix: Matrix) -> bool:
    size = len(matrix)
    return all(
        matrix[i][j] == matrix[j][i]
        for i in range(size) for j in range(i + 1, size)
    )


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def common_denominator(values: Iterable[Fraction]) -> int:
    return reduce(_lcm, (value.denominator for value in values), 1)


def solve_linear(matrix: Matrix, rhs: Vector) -> Vector:
    """Решение G·x = b безделительным методом Гаусса (Bareiss)."""
    size = len(matrix)
    rows: List[List[int]] = []
    for row, value in zip(matrix, rhs):
        entries = tuple(row) + (as_rational(value),)
        denominator = common_denominator(entries)
        rows.append([int(entry * denominator) for entry in entries])

    previous_pivot = 1
    for k in range(size):
        pivot_row = next((r for r in range(k, size) if rows[r][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrix('Определитель матрицы равен нулю.')
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size + 1):
                rows[i][j] = (
                    rows[i][j] * pivot - rows[i][k] * rows[k][j]
                ) // previous_pivot
            rows[i][k] = 0
        previous_pivot = pivot

    solution = [Fraction(0)] * size
    for i in reversed(range(size)):
        tail = sum(
            (rows[i][j] * solution[j] for j in range(i + 1, size)),
            Fraction(0)
        )
        solution[i] = (rows[i][size] - tail) / rows[i][i]
    return tuple(solution)


def canonical_normal(v: Vector) -> Vector:
    """Примитивный целый представитель прямой, порождённой v.

    Первая ненулевая координата результата положительна, поэтому
    canonical_normal(c·v) = canonical_normal(v) для любого c != 0.
    """
    if is_zero(v):
        raise ZeroVector('Нулевой вектор не задаёт гиперплоскость.')
    denominator = common_denominator(v)
    integers = [int(a * denominator) for a in v]
    divisor = reduce(gcd, (abs(a) for a in integers if a), 0)
    integers = [a // divisor for a in integers]
    leading = next(a for a in integers if a)
    if leading < 0:
        integers = [-a for a in integers]
    return tuple(Fraction(a) for a in integers)


def format_rational(value: Number) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def format_vector(x: Sequence[Number]) -> List[str]:
    return [format_rational(a) for a in x]


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_vector(items: Iterable[str]) -> Vector:
    return tuple(parse_rational(str(item)) for item in items)


def matrix_rank(rows: Iterable[Vector]) -> int:
    """Ранг набора векторов точным исключением."""
    pending = [list(row) for row in rows]
    rank = 0
    while pending:
        pivot_row = next((row for row in pending if any(row)), None)
        if pivot_row is None:
            break
        pending.remove(pivot_row)
        column = next(k for k, value in enumerate(pivot_row) if value)
        pivot = pivot_row[column]
        for row in pending:
            factor = row[column] / pivot
            if factor:
                for k in range(len(row)):
                    row[k] -= factor * pivot_row[k]
        rank += 1
    return rank
