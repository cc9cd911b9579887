"""Exact rational linear programming.

Standard-form solver for min c.x subject to A x = b, x >= 0, over Fractions
throughout: two phases, Bland's anti-cycling pivot rule, no tolerances.  A
basis-verification routine certifies optimality of a proposed basic solution
independently of the solver (feasibility of B^-1 b and nonpositive reduced
costs), so the two can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import SingularBasis, Unbounded

Matrix = List[List[Fraction]]
Vector = List[Fraction]


def _as_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def solve_square(B: Matrix, rhs: Vector) -> Optional[Vector]:
    """Gaussian elimination with exact pivots; None when B is singular."""
    n = len(B)
    grid = [[Fraction(v) for v in row] + [Fraction(rhs[i])]
            for i, row in enumerate(B)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if grid[i][k] != 0), None)
        if pivot_row is None:
            return None
        grid[k], grid[pivot_row] = grid[pivot_row], grid[k]
        piv = grid[k][k]
        grid[k] = [v / piv for v in grid[k]]
        for i in range(n):
            if i != k and grid[i][k] != 0:
                factor = grid[i][k]
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[k])]
    return [grid[i][n] for i in range(n)]


def matrix_rank(rows: Sequence[Sequence]) -> int:
    grid = _as_fractions(rows)
    if not grid:
        return 0
    m, n = len(grid), len(grid[0])
    rank = 0
    col = 0
    for col in range(n):
        pivot_row = next((i for i in range(rank, m) if grid[i][col] != 0), None)
        if pivot_row is None:
            continue
        grid[rank], grid[pivot_row] = grid[pivot_row], grid[rank]
        piv = grid[rank][col]
        grid[rank] = [v / piv for v in grid[rank]]
        for i in range(m):
            if i != rank and grid[i][col] != 0:
                factor = grid[i][col]
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[rank])]
        rank += 1
        if rank == m:
            break
    return rank


@dataclass
class LPSolution:
    status: str                 # "optimal" | "infeasible" | "unbounded"
    x: Vector
    objective: Fraction
    basis: Tuple[int, ...]


class _Tableau:
    """Dense simplex tableau with Bland's rule; all entries Fractions."""

    def __init__(self, A: Matrix, b: Vector):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.rows = [row[:] + [b[i]] for i, row in enumerate(A)]
        # flip rows so the right-hand side is nonnegative
        for i in range(self.m):
            if self.rows[i][-1] < 0:
                self.rows[i] = [-v for v in self.rows[i]]
        self.basis: List[int] = [-1] * self.m

    def add_columns(self, count: int) -> List[int]:
        first = self.n
        for i in range(self.m):
            self.rows[i][-1:-1] = [Fraction(0)] * count
        self.n += count
        return list(range(first, self.n))

    def pivot(self, row: int, col: int) -> None:
        piv = self.rows[row][col]
        self.rows[row] = [v / piv for v in self.rows[row]]
        for i in range(self.m):
            if i != row and self.rows[i][col] != 0:
                factor = self.rows[i][col]
                self.rows[i] = [a - factor * b
                                for a, b in zip(self.rows[i], self.rows[row])]
        self.basis[row] = col

    def reduced_costs(self, cost: Vector) -> Tuple[Vector, Fraction]:
        """Costs minus the basic combination, plus the current objective."""
        y = [cost[self.basis[i]] for i in range(self.m)]
        reduced = list(cost)
        objective = Fraction(0)
        for i in range(self.m):
            ci = y[i]
            if ci == 0:
                continue
            row = self.rows[i]
            for j in range(self.n):
                if row[j] != 0:
                    reduced[j] -= ci * row[j]
            objective += ci * row[-1]
        return reduced, objective

    def run(self, cost: Vector, allowed: Sequence[bool]) -> Fraction:
        """Minimise cost over the allowed columns; Bland's rule throughout."""
        while True:
            reduced, objective = self.reduced_costs(cost)
            entering = None
            for j in range(self.n):
                if allowed[j] and reduced[j] < 0:
                    entering = j
                    break
            if entering is None:
                return objective
            leaving = None
            best: Optional[Fraction] = None
            for i in range(self.m):
                a = self.rows[i][entering]
                if a > 0:
                    ratio = self.rows[i][-1] / a
                    if (best is None or ratio < best or
                            (ratio == best and self.basis[i] < self.basis[leaving])):
                        best = ratio
                        leaving = i
            if leaving is None:
                raise Unbounded("objective decreases without bound")
            self.pivot(leaving, entering)

    def solution(self) -> Vector:
        x = [Fraction(0)] * self.n
        for i in range(self.m):
            x[self.basis[i]] = self.rows[i][-1]
        return x


def simplex(A: Sequence[Sequence], b: Sequence, c: Sequence) -> LPSolution:
    """Two-phase exact simplex for min c.x, A x = b, x >= 0."""
    A = _as_fractions(A)
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    m = len(A)
    n = len(A[0]) if A else 0

    tab = _Tableau(A, b)
    artificial = tab.add_columns(m)
    for i, j in enumerate(artificial):
        tab.rows[i][j] = Fraction(1)
        tab.basis[i] = j

    phase1_cost = [Fraction(0)] * n + [Fraction(1)] * m
    allowed = [True] * tab.n
    value = tab.run(phase1_cost, allowed)
    if value > 0:
        return LPSolution("infeasible", [], Fraction(0), ())

    # drive any artificial variable out of the basis
    drop_rows: List[int] = []
    for i in range(m):
        if tab.basis[i] >= n:
            pivot_col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if pivot_col is None:
                drop_rows.append(i)  # redundant constraint
            else:
                tab.pivot(i, pivot_col)
    if drop_rows:
        for i in sorted(drop_rows, reverse=True):
            del tab.rows[i]
            del tab.basis[i]
        tab.m = len(tab.rows)

    allowed = [j < n for j in range(tab.n)]
    phase2_cost = c + [Fraction(0)] * (tab.n - n)
    objective = tab.run(phase2_cost, allowed)
    x = tab.solution()[:n]
    return LPSolution("optimal", x, objective, tuple(sorted(tab.basis)))


def feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    """Exact feasibility of A x = b, x >= 0 (phase one only)."""
    result = simplex(A, b, [0] * (len(A[0]) if A else 0))
    return result.status == "optimal"


@dataclass(frozen=True)
class BasisReport:
    feasible: bool
    strictly_feasible: bool
    optimal: bool
    x: Tuple[Fraction, ...]
    objective: Fraction


def verify_basis(A: Sequence[Sequence], b: Sequence, c: Sequence,
                 basis: Sequence[int]) -> BasisReport:
    """Certify a basic solution: x_B = B^-1 b and reduced costs <= 0.

    The optimality test is the classical one for a minimisation problem:
    with y solving y B = c_B, the certified condition is y A - c <= 0
    componentwise.  Raises SingularBasis when the chosen columns are
    dependent.
    """
    A = _as_fractions(A)
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    m = len(A)
    if len(basis) != m:
        raise SingularBasis(f"basis needs {m} columns, got {len(basis)}")
    B = [[A[i][j] for j in basis] for i in range(m)]
    xb = solve_square(B, b)
    if xb is None:
        raise SingularBasis(f"columns {tuple(basis)} are linearly dependent")
    Bt = [[B[i][j] for i in range(m)] for j in range(m)]
    y = solve_square(Bt, [c[j] for j in basis])
    assert y is not None
    n = len(A[0])
    optimal = True
    for j in range(n):
        reduced = sum(y[i] * A[i][j] for i in range(m)) - c[j]
        if reduced > 0:
            optimal = False
            break
    x = [Fraction(0)] * n
    for value, j in zip(xb, basis):
        x[j] = value
    objective = sum(c[j] * x[j] for j in range(n))
    return BasisReport(
        feasible=all(v >= 0 for v in xb),
        strictly_feasible=all(v > 0 for v in xb),
        optimal=optimal,
        x=tuple(x),
        objective=objective,
    )
