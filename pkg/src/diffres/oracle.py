"""Independent elimination oracle via iterated univariate resultants.

The variables are removed one at a time with Sylvester determinants, each of
which is an explicit combination of its two inputs, so the final
symbol-only polynomial vanishes wherever the whole system has a common
zero.  This route never touches the matrix construction it is used to
cross-check.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Sequence, Tuple

from .errors import DegreeZero, IntermediateZero
from .diffsys import (DiffPoly, SystemSpec, YMonomial, delta, generic_system,
                      YM_ONE)
from .sympoly import SymPoly

VAR_INDEX = {"y": 0, "y1": 1, "y2": 2}


def coefficients_in(p: DiffPoly, var: str) -> List[DiffPoly]:
    """Coefficient list of p along one variable, constant term first."""
    axis = VAR_INDEX[var]
    degree = p.degree_in(axis)
    buckets: List[Dict[YMonomial, SymPoly]] = [dict() for _ in range(degree + 1)]
    for m, c in p.items():
        e = m[axis]
        rest = list(m)
        rest[axis] = 0
        buckets[e][YMonomial(*rest)] = c
    return [DiffPoly(b) for b in buckets]


def ring_det(grid: Sequence[Sequence], add: Callable, mul: Callable,
             neg: Callable, is_zero: Callable, zero, one):
    """Cofactor expansion with minor memoization over any commutative ring."""
    n = len(grid)
    cache: Dict[Tuple[int, Tuple[int, ...]], object] = {}

    def minor(row: int, cols: Tuple[int, ...]):
        if not cols:
            return one
        key = (row, cols)
        if key in cache:
            return cache[key]
        total = zero
        for pos, j in enumerate(cols):
            v = grid[row][j]
            if is_zero(v):
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if is_zero(sub):
                continue
            term = mul(v, sub)
            if pos % 2 == 1:
                term = neg(term)
            total = add(total, term)
        cache[key] = total
        return total

    return minor(0, tuple(range(n)))


def sylvester_resultant(p: DiffPoly, q: DiffPoly, var: str) -> DiffPoly:
    """Determinant of the Sylvester matrix of p and q in one variable."""
    if var not in VAR_INDEX:
        raise ValueError(f"unknown variable {var!r}")
    pc = coefficients_in(p, var)
    qc = coefficients_in(q, var)
    m, n = len(pc) - 1, len(qc) - 1
    if m <= 0 or n <= 0:
        raise DegreeZero(f"both inputs need positive degree in {var}")
    size = m + n
    zero = DiffPoly.zero()
    grid: List[List[DiffPoly]] = []
    for shift in range(n):
        row = [zero] * size
        for k, coeff in enumerate(reversed(pc)):   # leading coefficient first
            row[shift + k] = coeff
        grid.append(row)
    for shift in range(m):
        row = [zero] * size
        for k, coeff in enumerate(reversed(qc)):
            row[shift + k] = coeff
        grid.append(row)
    from .sympoly import SymPoly
    from .diffsys import YM_ONE
    return ring_det(grid,
                    add=lambda a, b: a + b,
                    mul=lambda a, b: a * b,
                    neg=lambda a: -a,
                    is_zero=lambda a: a.is_zero(),
                    zero=DiffPoly.zero(),
                    one=DiffPoly({YM_ONE: SymPoly.one()}))


def eliminate_iterated(spec: SystemSpec, substitution=None) -> SymPoly:
    """Chain the variables away: y2 first, then y1, then y.

    Returns a polynomial purely in the coefficient symbols.  Small systems
    only: the fully symbolic path is the degree-one case; the degree-two
    case needs a substitution that pins at least the leading coefficients
    (term growth is explosive otherwise).  Raises IntermediateZero when a
    resultant collapses, which happens for degenerate substitutions that
    make two inputs share a factor.
    """
    spec = SystemSpec(*spec).validate()
    if (spec.d1, spec.d2) != (1, 1):
        if (spec.d1, spec.d2) != (2, 2) or substitution is None:
            raise ValueError(
                "iterated elimination runs fully symbolic only for degrees "
                "(1, 1); degrees (2, 2) need a substitution")
    f1, f2 = generic_system(spec)
    df1, df2 = delta(f1), delta(f2)
    if substitution:
        f1 = f1.substitute_symbols(substitution)
        f2 = f2.substitute_symbols(substitution)
        df1 = df1.substitute_symbols(substitution)
        df2 = df2.substitute_symbols(substitution)

    def checked(p: DiffPoly, stage: str) -> DiffPoly:
        if p.is_zero():
            raise IntermediateZero(f"resultant collapsed at stage {stage}")
        return p

    e1 = checked(sylvester_resultant(df1, df2, "y2"), "y2")
    e2 = checked(sylvester_resultant(f1, f2, "y1"), "y1 (base pair)")
    e3 = checked(sylvester_resultant(e1, f1, "y1"), "y1 (derived pair)")
    out = checked(sylvester_resultant(e2, e3, "y"), "y")
    if out.support_set() != (YM_ONE,):
        raise IntermediateZero("final stage still contains variables")
    return out.coefficient(YM_ONE)
