"""Macaulay-style square matrices and the larger rectangular construction.

Rows are monomial multiples of the four polynomials (derivatives included);
columns are the monomials of the chosen column set in decreasing canonical
order.  Entries are stored sparsely and every stored entry is nonzero, so a
row re-derives exactly from its label and generating polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, NamedTuple, Sequence, Tuple

from .errors import ClosureViolation, DiffresError
from .diffsys import (DiffPoly, SystemSpec, YMonomial, delta, generic_poly,
                      generic_system, ym_csv_name, ym_key, ym_mul, ym_render)
from .monomials import closed_form_sets, column_set
from .sympoly import Specialization, SymPoly

# Row polynomial tags for the square construction; derivatives carry primes.
DF1, DF2, F1, F2 = "f1'", "f2'", "f1", "f2"
SQUARE_BLOCK_ORDER = (DF1, DF2, F1, F2)


class RowLabel(NamedTuple):
    poly: str          # "f1", "f1'", "p2", "p2''", ...
    mult: YMonomial    # the row is mult * (the named polynomial)

    def render(self) -> str:
        return f"{ym_render(self.mult)}*{self.poly}"


class PolyMatrix:
    """Labeled sparse matrix with polynomial entries and fixed orderings."""

    __slots__ = ("rows", "cols", "entries", "polys", "_col_index", "meta")

    def __init__(self, rows: Sequence[RowLabel], cols: Sequence[YMonomial],
                 entries: Mapping[Tuple[int, int], SymPoly],
                 polys: Mapping[str, DiffPoly], meta: dict | None = None):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}
        self.polys = dict(polys)
        self._col_index = {c: j for j, c in enumerate(self.cols)}
        self.meta = dict(meta or {})

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.cols)

    def col_index(self, m: YMonomial) -> int:
        return self._col_index[m]

    def entry(self, i: int, j: int) -> SymPoly:
        return self.entries.get((i, j), SymPoly.zero())

    def row_entries(self, i: int) -> Dict[int, SymPoly]:
        return {j: v for (r, j), v in self.entries.items() if r == i}

    def symbols(self) -> set:
        out = set()
        for v in self.entries.values():
            out |= v.symbols()
        return out

    def substitute(self, mapping) -> "PolyMatrix":
        entries = {k: v.substitute(mapping) for k, v in self.entries.items()}
        polys = {name: p.substitute_symbols(mapping)
                 for name, p in self.polys.items()}
        return PolyMatrix(self.rows, self.cols, entries, polys, self.meta)

    def specialize(self, s: Specialization) -> List[List[Fraction]]:
        dense = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            dense[i][j] = v.evaluate(s)
        return dense

    def row_label_map(self) -> Dict[RowLabel, Dict[YMonomial, SymPoly]]:
        """Row content keyed by label, for order-insensitive comparison."""
        out: Dict[RowLabel, Dict[YMonomial, SymPoly]] = {r: {} for r in self.rows}
        for (i, j), v in self.entries.items():
            out[self.rows[i]][self.cols[j]] = v
        return out

    def to_json(self) -> dict:
        return {
            "shape": [self.nrows, self.ncols],
            "meta": {k: v for k, v in self.meta.items()
                     if isinstance(v, (str, int, list, tuple))},
            "rows": [{"poly": r.poly, "multiplier": list(r.mult)}
                     for r in self.rows],
            "cols": [list(c) for c in self.cols],
            "entries": [[i, j, v.render()]
                        for (i, j), v in sorted(self.entries.items())],
        }

    def to_csv(self, s: Specialization) -> str:
        dense = self.specialize(s)
        header = ["row"] + [ym_csv_name(c) for c in self.cols]
        lines = [",".join(header)]
        for label, row in zip(self.rows, dense):
            lines.append(",".join([label.render()] + [str(v) for v in row]))
        return "\n".join(lines) + "\n"


def _fill_rows(row_plan: Sequence[Tuple[RowLabel, DiffPoly]],
               cols: Sequence[YMonomial]) -> Dict[Tuple[int, int], SymPoly]:
    col_index = {c: j for j, c in enumerate(cols)}
    entries: Dict[Tuple[int, int], SymPoly] = {}
    for i, (label, poly) in enumerate(row_plan):
        for m, coeff in poly.items():
            target = ym_mul(m, label.mult)
            j = col_index.get(target)
            if j is None:
                raise ClosureViolation(
                    f"row {label.render()} produces {ym_render(target)} "
                    "outside the column set")
            entries[(i, j)] = coeff
    return entries


def build_square_matrix(spec: SystemSpec) -> PolyMatrix:
    """The square matrix whose determinant the construction certifies.

    Block rows: multiplier sets from the closed forms times (df1, df2, f1, f2);
    columns: the column set in decreasing canonical order.
    """
    spec = SystemSpec(*spec).validate()
    f1, f2 = generic_system(spec)
    polys = {DF1: delta(f1), DF2: delta(f2), F1: f1, F2: f2}
    m1, m2, t1, t2 = closed_form_sets(spec)
    multipliers = {DF1: m1, DF2: m2, F1: t1, F2: t2}

    cols = sorted(column_set(spec), key=ym_key, reverse=True)
    row_plan: List[Tuple[RowLabel, DiffPoly]] = []
    block_counts = []
    for tag in SQUARE_BLOCK_ORDER:
        ms = sorted(multipliers[tag], key=ym_key, reverse=True)
        block_counts.append(len(ms))
        for mult in ms:
            row_plan.append((RowLabel(tag, mult), polys[tag]))

    entries = _fill_rows(row_plan, cols)
    matrix = PolyMatrix([r for r, _ in row_plan], cols, entries, polys,
                        meta={"kind": "square", "spec": [spec.d1, spec.d2],
                              "block_counts": block_counts})
    assert matrix.nrows == matrix.ncols == spec.N
    return matrix


def _iterated_delta(p: DiffPoly, times: int) -> DiffPoly:
    for _ in range(times):
        p = delta(p)
    return p


def carra_ferro_shape(d1: int, d2: int, n: int, m: int) -> dict:
    """Row/column counts of the rectangular construction."""
    from math import comb
    D = 1 + (n + 1) * (d1 - 1) + (m + 1) * (d2 - 1)
    v = m + n + 1
    L = comb(v + D, v)
    L1 = comb(v + D - d1, v)
    L2 = comb(v + D - d2, v)
    return {"D": D, "L": L, "L1": L1, "L2": L2,
            "rows": (n + 1) * L1 + (m + 1) * L2}


def build_carra_ferro(d1: int, d2: int, n: int, m: int) -> PolyMatrix:
    """Rectangular matrix of all derivative rows over the full degree-D box.

    The first polynomial has order m and degree d1 and receives derivatives
    up to order n; the second has order n and degree d2 and receives
    derivatives up to order m.  Only m + n <= 2 fits the three-variable
    alphabet (y, y1, y2).
    """
    if m + n > 2:
        raise DiffresError("variable alphabet stops at y2: need m + n <= 2")
    if min(d1, d2) < 1 or min(m, n) < 0:
        raise ValueError("degrees must be >= 1 and orders >= 0")
    from .monomials import bset

    shape = carra_ferro_shape(d1, d2, n, m)
    D = shape["D"]
    var_count = m + n + 1  # monomials live in bset(var_count + 1, .)

    p1 = generic_poly("a", d1, order=min(m, 1))
    p2 = generic_poly("b", d2, order=min(n, 1))
    if m > 1 or n > 1:
        raise DiffresError("generic polynomials of order > 1 are not representable")

    cols = sorted(bset(var_count + 1, D), key=ym_key, reverse=True)
    mult1 = sorted(bset(var_count + 1, D - d1), key=ym_key, reverse=True)
    mult2 = sorted(bset(var_count + 1, D - d2), key=ym_key, reverse=True)

    polys: Dict[str, DiffPoly] = {}
    row_plan: List[Tuple[RowLabel, DiffPoly]] = []
    for level in range(n, -1, -1):
        tag = "p1" + "'" * level
        polys[tag] = _iterated_delta(p1, level)
        for mult in mult1:
            row_plan.append((RowLabel(tag, mult), polys[tag]))
    for level in range(m, -1, -1):
        tag = "p2" + "'" * level
        polys[tag] = _iterated_delta(p2, level)
        for mult in mult2:
            row_plan.append((RowLabel(tag, mult), polys[tag]))

    entries = _fill_rows(row_plan, cols)
    matrix = PolyMatrix([r for r, _ in row_plan], cols, entries, polys,
                        meta={"kind": "carra-ferro",
                              "params": [d1, d2, n, m], **shape})
    assert matrix.nrows == shape["rows"] and matrix.ncols == shape["L"]
    return matrix


def zero_columns(matrix: PolyMatrix) -> List[YMonomial]:
    hit = set(j for (_, j) in matrix.entries)
    return [c for j, c in enumerate(matrix.cols) if j not in hit]
