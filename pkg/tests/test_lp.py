"""Exact simplex engine and basis verification."""

from fractions import Fraction

import pytest

from diffres import SingularBasis
from diffres.lp import (feasible, matrix_rank, simplex, solve_square,
                        verify_basis)
from diffres.errors import Unbounded


F = Fraction


class TestSolveSquare:
    def test_inverse_action(self):
        B = [[F(2), F(1)], [F(1), F(3)]]
        x = solve_square(B, [F(5), F(10)])
        assert x == [F(1), F(3)]

    def test_singular_returns_none(self):
        B = [[F(1), F(2)], [F(2), F(4)]]
        assert solve_square(B, [F(1), F(1)]) is None


class TestRank:
    def test_full_rank(self):
        assert matrix_rank([[1, 0], [0, 1]]) == 2

    def test_deficient(self):
        assert matrix_rank([[1, 2, 3], [2, 4, 6], [0, 0, 1]]) == 2


class TestSimplex:
    def test_minimizes_exactly(self):
        # min x + y  s.t.  x + 2y = 4, 3x + 2y = 8, x, y >= 0
        result = simplex([[1, 2], [3, 2]], [4, 8], [1, 1])
        assert result.status == "optimal"
        assert result.x == [F(2), F(1)]
        assert result.objective == 3

    def test_fractional_optimum_is_exact(self):
        # min -2x - 3y over 3x + y <= 7, x + 2y <= 5: corner (9/5, 8/5)
        result = simplex([[3, 1, 1, 0], [1, 2, 0, 1]], [7, 5], [-2, -3, 0, 0])
        assert result.status == "optimal"
        assert result.objective == F(-42, 5)
        assert result.x[:2] == [F(9, 5), F(8, 5)]

    def test_infeasible(self):
        # x1 + x2 = -1 cannot hold with nonnegative variables
        result = simplex([[1, 1]], [-1], [1, 1])
        assert result.status == "infeasible"

    def test_unbounded(self):
        with pytest.raises(Unbounded):
            simplex([[1, -1]], [0], [-1, 0])

    def test_degenerate_cycling_guard(self):
        # Beale's cycling example; Bland's rule must terminate at -1/20
        A = [[F(1, 4), -60, F(-1, 25), 9, 1, 0, 0],
             [F(1, 2), -90, F(-1, 50), 3, 0, 1, 0],
             [0, 0, 1, 0, 0, 0, 1]]
        b = [0, 0, 1]
        c = [F(-3, 4), 150, F(-1, 50), 6, 0, 0, 0]
        result = simplex(A, b, c)
        assert result.status == "optimal"
        assert result.objective == F(-1, 20)

    def test_feasibility_probe(self):
        assert feasible([[1, 1]], [1])
        assert not feasible([[1, 1]], [-2])


class TestVerifyBasis:
    def test_certifies_known_optimum(self):
        A = [[1, 2], [3, 2]]
        b = [4, 8]
        c = [1, 1]
        report = verify_basis(A, b, c, [0, 1])
        assert report.feasible and report.strictly_feasible
        assert report.optimal
        assert report.objective == 3
        assert simplex(A, b, c).objective == report.objective

    def test_feasible_but_not_optimal(self):
        # maximize profit written as min of negatives; slack-only basis is
        # feasible at the origin but improvable
        A = [[1, 1, 1, 0], [1, 3, 0, 1]]
        b = [4, 6]
        c = [-2, -1, 0, 0]
        report = verify_basis(A, b, c, [2, 3])
        assert report.feasible
        assert not report.optimal

    def test_singular_basis_raises(self):
        A = [[1, 2, 2], [2, 4, 4]]
        with pytest.raises(SingularBasis):
            verify_basis(A, [1, 2], [0, 0, 0], [1, 2])

    def test_wrong_size_raises(self):
        with pytest.raises(SingularBasis):
            verify_basis([[1, 0], [0, 1]], [1, 1], [0, 0], [0])

    def test_infeasible_basis_reported(self):
        A = [[1, 1], [1, -1]]
        b = [1, 3]
        report = verify_basis(A, b, [1, 1], [0, 1])
        # B^-1 b = (2, -1): not a feasible corner
        assert not report.feasible
        assert not report.strictly_feasible
