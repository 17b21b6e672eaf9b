from fractions import Fraction

from polytopes.simplex import PhaseOneTableau, feasible_point


def _check(rows, rhs, solution):
    for row, b in zip(rows, rhs):
        assert sum(a * x for a, x in zip(row, solution)) == b, (
            'Проверьте, что найденная точка удовлетворяет A·x = b'
        )
    assert all(x >= 0 for x in solution), (
        'Проверьте, что найденная точка неотрицательна'
    )


class Test05ExactSimplex:

    def test_01_feasible(self):
        rows = [[Fraction(1), Fraction(1)]]
        rhs = [Fraction(2)]
        solution = feasible_point(rows, rhs)
        assert solution is not None
        _check(rows, rhs, solution)

    def test_02_infeasible(self):
        assert feasible_point([[Fraction(1), Fraction(1)]],
                              [Fraction(-1)]) is None, (
            'Проверьте, что x1 + x2 = -1 при x ≥ 0 несовместна'
        )
        rows = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(0)]]
        assert feasible_point(rows, [Fraction(1), Fraction(2)]) is None

    def test_03_negative_rhs(self):
        rows = [[Fraction(1), Fraction(-1)], [Fraction(0), Fraction(1)]]
        rhs = [Fraction(-1, 2), Fraction(3, 4)]
        solution = feasible_point(rows, rhs)
        assert solution == [Fraction(1, 4), Fraction(3, 4)]
        _check(rows, rhs, solution)

    def test_04_box_constraints(self):
        # x1·v1 + x2·v2 = p, x_i + s_i = 1
        rows = [
            [Fraction(2, 3), Fraction(-1, 3), 0, 0],
            [Fraction(1, 3), Fraction(1, 3), 0, 0],
            [1, 0, 1, 0],
            [0, 1, 0, 1],
        ]
        rhs = [Fraction(1, 3), Fraction(2, 3), 1, 1]
        solution = feasible_point(rows, rhs)
        assert solution[:2] == [Fraction(1), Fraction(1)]
        _check(rows, rhs, solution)

    def test_05_degenerate_rows(self):
        rows = [[Fraction(1), Fraction(1), Fraction(0)],
                [Fraction(2), Fraction(2), Fraction(0)],
                [Fraction(0), Fraction(0), Fraction(0)]]
        rhs = [Fraction(1), Fraction(2), Fraction(0)]
        solution = feasible_point(rows, rhs)
        assert solution is not None, (
            'Проверьте, что линейно зависимые строки не мешают найти решение'
        )
        _check(rows, rhs, solution)

    def test_06_empty_system(self):
        assert feasible_point([], []) == []

    def test_07_pivots_counted(self):
        tableau = PhaseOneTableau([[Fraction(1), Fraction(2)]], [Fraction(4)])
        solution = tableau.solve()
        assert tableau.pivots >= 1
        _check([[1, 2]], [4], solution)
