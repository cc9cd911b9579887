"""Sparse-resultant machinery: polytopes, lattice points, LP partition.

The column monomials are recovered as the lattice points of a perturbed
Minkowski sum, decided exactly by LP feasibility instead of any convex-hull
geometry.  For each point a 7x18 linear program over the four vertex lists
is solved; an optimal solution that concentrates one block on a single
vertex assigns the point to that block (its generalized row content).  With
suitable integer liftings the selected vertices are exactly the four main
monomials, the blocks tile the column set, and the resulting square matrix
is a row rearrangement of the standard one after a short list of legal
moves.

Ties between alternative optima are broken deterministically: the catalog
of certified bases is scanned in its fixed order requiring strict
feasibility, then weak feasibility, then a restricted-LP search over the
four target vertices in block order.  The choice is recorded per point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (ClosureViolation, DiffresError, IllegalMove, Infeasible,
                     InvalidPerturbation, NoVertexOptimum, SingularBasis,
                     Unbounded)
from . import lp
from .diffsys import (DiffPoly, SystemSpec, YMonomial, delta, generic_system,
                      support, ym_divides, ym_div, ym_key, ym_mul, ym_render)
from .matrices import (DF1, DF2, F1, F2, PolyMatrix, RowLabel,
                       SQUARE_BLOCK_ORDER, _fill_rows)
from .monomials import (MainMonomials, MonomialSet, Partition, column_set,
                        default_main_monomials)

Point = Tuple[int, int, int]
LiftVector = Tuple[int, int, int]

DEFAULT_PERTURBATION: Tuple[Fraction, Fraction, Fraction] = (
    Fraction(1, 100), Fraction(1, 100), Fraction(1, 100))


@dataclass(frozen=True)
class Liftings:
    """One integer height vector per polytope, acting on (y, y1, y2)."""

    l1: LiftVector
    l2: LiftVector
    l3: LiftVector
    l4: LiftVector

    def as_tuple(self) -> Tuple[LiftVector, ...]:
        return (self.l1, self.l2, self.l3, self.l4)

    def height(self, i: int, point: Sequence[int]) -> int:
        vec = self.as_tuple()[i - 1]
        return sum(a * b for a, b in zip(vec, point))


# Integer liftings satisfying every merged optimality constraint checked by
# validate_liftings below.
DEFAULT_LIFTINGS = Liftings((7, -4, -5), (5, -9, 5), (6, 2, 1), (8, 4, 7))


@dataclass(frozen=True)
class Polytope:
    points: Tuple[Point, ...]
    vertices: Tuple[Point, ...]


def vertex_lists(spec: SystemSpec) -> Tuple[Tuple[Point, ...], ...]:
    """The four vertex lists in the order that fixes the LP variable labels.

    Degenerate coincidences for d1 = 1 are kept: the list length is what the
    LP's 18 columns are built from.
    """
    spec = SystemSpec(*spec).validate()
    d1, d2 = spec.d1, spec.d2
    v1 = ((0, 0, 0), (0, 0, 1), (0, d1 - 1, 1), (0, d1, 0), (d1 - 1, 0, 1), (d1, 0, 0))
    v2 = ((0, 0, 0), (0, 0, 1), (0, d2 - 1, 1), (0, d2, 0), (d2 - 1, 0, 1), (d2, 0, 0))
    v3 = ((0, 0, 0), (0, d1, 0), (d1, 0, 0))
    v4 = ((0, 0, 0), (0, d2, 0), (d2, 0, 0))
    return (v1, v2, v3, v4)


BLOCK_SIZES = (6, 6, 3, 3)
TARGET_VERTEX = {1: 3, 2: 4, 3: 3, 4: 1}   # lambda index of the main monomial


def var_labels() -> Tuple[str, ...]:
    labels = []
    for i, size in enumerate(BLOCK_SIZES, start=1):
        for j in range(1, size + 1):
            labels.append(f"lam{i}{j}")
    return tuple(labels)


def var_index(i: int, j: int) -> int:
    return sum(BLOCK_SIZES[:i - 1]) + (j - 1)


def in_hull(point: Sequence, vertices: Sequence[Point]) -> bool:
    """Exact membership of a point in the convex hull of the vertices."""
    A = [[Fraction(v[axis]) for v in vertices] for axis in range(3)]
    A.append([Fraction(1)] * len(vertices))
    b = [Fraction(x) for x in point] + [Fraction(1)]
    return lp.feasible(A, b)


def newton_data(spec: SystemSpec) -> Tuple[Polytope, Polytope, Polytope, Polytope]:
    """Support points and (deduplicated) vertex sets of the four polytopes."""
    spec = SystemSpec(*spec).validate()
    f1, f2 = generic_system(spec)
    supports = [support(delta(f1)), support(delta(f2)), support(f1), support(f2)]
    out = []
    for pts, verts in zip(supports, vertex_lists(spec)):
        unique = tuple(dict.fromkeys(verts))
        out.append(Polytope(tuple((m.ey, m.ey1, m.ey2) for m in pts), unique))
    return tuple(out)


@dataclass(frozen=True)
class LPInstance:
    """Standard-form data for one lattice point."""

    A: Tuple[Tuple[Fraction, ...], ...]   # 7 x 18
    b: Tuple[Fraction, ...]               # (A1, A2, A3, 1, 1, 1, 1)
    c: Tuple[Fraction, ...]               # lifting heights, 18 entries
    labels: Tuple[str, ...]
    point: Point
    spec: Tuple[int, int]


def _constraint_matrix(spec: SystemSpec) -> List[List[Fraction]]:
    lists = vertex_lists(spec)
    cols: List[Tuple[int, ...]] = []
    for verts in lists:
        cols.extend(verts)
    rows: List[List[Fraction]] = []
    for axis in range(3):
        rows.append([Fraction(v[axis]) for v in cols])
    offset = 0
    for size in BLOCK_SIZES:
        row = [Fraction(0)] * len(cols)
        for j in range(size):
            row[offset + j] = Fraction(1)
        rows.append(row)
        offset += size
    return rows


def build_lp(q: Sequence[int], spec: SystemSpec, lift: Liftings,
             delta_vec: Sequence[Fraction] = DEFAULT_PERTURBATION) -> LPInstance:
    spec = SystemSpec(*spec).validate()
    _check_perturbation(delta_vec)
    A = _constraint_matrix(spec)
    b = [Fraction(q[k]) - Fraction(delta_vec[k]) for k in range(3)]
    b += [Fraction(1)] * 4
    c: List[Fraction] = []
    for i, verts in enumerate(vertex_lists(spec), start=1):
        for v in verts:
            c.append(Fraction(lift.height(i, v)))
    return LPInstance(
        A=tuple(tuple(row) for row in A),
        b=tuple(b),
        c=tuple(c),
        labels=var_labels(),
        point=tuple(int(x) for x in q),
        spec=(spec.d1, spec.d2),
    )


def _check_perturbation(delta_vec: Sequence[Fraction]) -> None:
    if len(delta_vec) != 3 or any(not (0 < Fraction(d) < 1) for d in delta_vec):
        raise InvalidPerturbation(
            f"perturbation must have three components in (0, 1): {delta_vec}")


def lattice_points(spec: SystemSpec,
                   delta_vec: Sequence[Fraction] = DEFAULT_PERTURBATION) -> List[Point]:
    """Integer points of the perturbed Minkowski sum, by exact feasibility.

    The bounding box [0, 2*d1 + 2*d2]^3 is scanned; a point is kept when the
    vertex-decomposition system for it admits a nonnegative solution.
    """
    spec = SystemSpec(*spec).validate()
    _check_perturbation(delta_vec)
    A = _constraint_matrix(spec)
    limit = 2 * spec.d1 + 2 * spec.d2
    found: List[Point] = []
    for q in iter_product(range(limit + 1), repeat=3):
        b = [Fraction(q[k]) - Fraction(delta_vec[k]) for k in range(3)]
        b += [Fraction(1)] * 4
        if lp.feasible(A, b):
            found.append(q)
    found.sort(key=lambda p: (sum(p), p[2], p[1], p[0]))
    return found


def simplex_solve(inst: LPInstance) -> lp.LPSolution:
    result = lp.simplex(inst.A, inst.b, inst.c)
    if result.status == "infeasible":
        raise Infeasible(f"lattice point {inst.point} admits no decomposition")
    if result.status == "unbounded":
        raise Unbounded("vertex-decomposition LP cannot be unbounded")
    return result


def verify_basis(inst: LPInstance, basis_labels: Sequence[str]) -> lp.BasisReport:
    index = {label: k for k, label in enumerate(inst.labels)}
    try:
        basis = [index[label] for label in basis_labels]
    except KeyError as exc:
        raise SingularBasis(f"unknown variable label {exc}") from None
    return lp.verify_basis(inst.A, inst.b, inst.c, basis)


# --- certified basis catalog -------------------------------------------------

def _basis(*pairs: Tuple[int, int]) -> Tuple[str, ...]:
    return tuple(f"lam{i}{j}" for i, j in pairs)


# Scanned in order; each entry is (case, id, basis labels).  Every basis
# contains exactly one variable of its case's block, which the convexity row
# then pins to one, selecting that block's target vertex.
CASE_BASES: Tuple[Tuple[int, str, Tuple[str, ...]], ...] = (
    (1, "1.1", _basis((1, 3), (2, 3), (2, 4), (3, 2), (3, 3), (4, 1), (4, 3))),
    (1, "1.2", _basis((1, 3), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (4, 1))),
    (1, "1.3", _basis((1, 3), (2, 3), (2, 4), (3, 2), (3, 3), (4, 1), (4, 2))),
    (1, "1.4", _basis((1, 3), (2, 3), (2, 4), (3, 3), (4, 1), (4, 2), (4, 3))),
    (2, "2.1", _basis((1, 3), (1, 4), (2, 4), (3, 1), (3, 2), (3, 3), (4, 1))),
    (2, "2.2", _basis((1, 3), (1, 4), (2, 4), (3, 3), (4, 1), (4, 2), (4, 3))),
    (2, "2.3", _basis((1, 3), (1, 4), (2, 4), (3, 2), (3, 3), (4, 1), (4, 3))),
    (2, "2.4", _basis((1, 3), (1, 4), (2, 4), (3, 2), (3, 3), (4, 1), (4, 2))),
    (2, "2.5", _basis((1, 1), (1, 2), (1, 3), (2, 4), (3, 1), (3, 3), (4, 1))),
    (2, "2.6", _basis((1, 3), (1, 4), (1, 5), (2, 4), (3, 3), (4, 1), (4, 3))),
    (2, "2.7", _basis((1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (3, 3), (4, 1))),
    (3, "3.1", _basis((1, 5), (1, 6), (2, 4), (2, 6), (3, 3), (4, 1), (4, 3))),
    (3, "3.2", _basis((1, 3), (1, 5), (2, 3), (2, 4), (3, 3), (4, 1), (4, 3))),
    (3, "3.3", _basis((1, 5), (2, 3), (2, 4), (2, 5), (3, 3), (4, 1), (4, 3))),
    (3, "3.4", _basis((1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 3), (4, 1))),
    (4, "4.1", _basis((1, 1), (1, 2), (2, 1), (2, 4), (2, 6), (3, 1), (4, 1))),
    (4, "4.2", _basis((1, 1), (1, 2), (2, 4), (2, 6), (3, 1), (3, 3), (4, 1))),
    (4, "4.3", _basis((1, 1), (1, 2), (1, 5), (2, 4), (2, 6), (3, 3), (4, 1))),
    (4, "4.4", _basis((1, 2), (1, 3), (2, 3), (2, 4), (3, 1), (3, 3), (4, 1))),
    (4, "4.5", _basis((1, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 3), (4, 1))),
    (4, "4.6", _basis((1, 2), (2, 1), (2, 2), (2, 3), (2, 5), (3, 1), (4, 1))),
    (4, "4.7", _basis((1, 2), (1, 5), (2, 3), (2, 5), (2, 6), (3, 3), (4, 1))),
)


@dataclass(frozen=True)
class LiftingReport:
    passed: bool
    violations: Tuple[str, ...]
    degenerate: Tuple[str, ...]   # inequalities holding with equality


def validate_liftings(lift: Liftings) -> LiftingReport:
    """Check the merged optimality constraints on the lifting heights."""
    (l11, l12, l13), (l21, l22, l23) = lift.l1, lift.l2
    (l31, l32, l33), (l41, l42, l43) = lift.l3, lift.l4
    inequalities = [
        ("L11 - L12 - L21 + L22 <= 0", l11 - l12 - l21 + l22),
        ("L13 <= L23", l13 - l23),
        ("L21 <= L31", l21 - l31),
        ("L31 <= L11", l31 - l11),
        ("L11 <= L41", l11 - l41),
        ("L22 <= L12", l22 - l12),
        ("L12 <= L32", l12 - l32),
        ("L32 <= L42", l32 - l42),
    ]
    violations = []
    degenerate = []
    for name, value in inequalities:
        if value > 0:
            violations.append(name)
        elif value == 0:
            degenerate.append(name)
    if l31 != l32 + l41 - l42:
        violations.append("L31 = L32 + L41 - L42")
    return LiftingReport(passed=not violations,
                         violations=tuple(violations),
                         degenerate=tuple(degenerate))


# --- GRC partition -----------------------------------------------------------

@dataclass(frozen=True)
class GrcAssignment:
    point: Point
    case: int                      # 1..4
    vertex_index: int              # j with lambda_{case, j} = 1
    vertex: Point
    main_monomial: YMonomial
    basis_id: str                  # catalog id, or "search"
    lam: Tuple[Fraction, ...]
    objective: Fraction


@dataclass(frozen=True)
class GrcPartitionResult:
    partition: Partition
    assignments: Dict[Point, GrcAssignment]
    liftings: Liftings
    perturbation: Tuple[Fraction, ...]


def _unit_at(solution: Sequence[Fraction], i: int, j: int) -> bool:
    offset = sum(BLOCK_SIZES[:i - 1])
    block = solution[offset:offset + BLOCK_SIZES[i - 1]]
    return block[j - 1] == 1 and all(v == 0 for k, v in enumerate(block, 1) if k != j)


def _restricted_optimum(inst: LPInstance, i: int, j: int) -> Optional[lp.LPSolution]:
    """Optimal value of the LP with lambda_{ij} pinned to one, if feasible."""
    offset = sum(BLOCK_SIZES[:i - 1])
    size = BLOCK_SIZES[i - 1]
    keep = [k for k in range(18) if not (offset <= k < offset + size)]
    pinned = var_index(i, j)
    rows = []
    rhs = []
    for r in range(7):
        if r == 3 + (i - 1):
            continue  # convexity row of the pinned block is spent
        rows.append([inst.A[r][k] for k in keep])
        rhs.append(inst.b[r] - inst.A[r][pinned])
    cost = [inst.c[k] for k in keep]
    result = lp.simplex(rows, rhs, cost)
    if result.status != "optimal":
        return None
    return lp.LPSolution(result.status, result.x,
                         result.objective + inst.c[pinned], result.basis)


def _assign_point(inst: LPInstance) -> GrcAssignment:
    # strict pass, then weak pass over the certified catalog
    for strict in (True, False):
        for case, bid, labels in CASE_BASES:
            try:
                report = verify_basis(inst, labels)
            except SingularBasis:
                continue
            ok = report.strictly_feasible if strict else report.feasible
            if ok and report.optimal:
                j = TARGET_VERTEX[case]
                if not _unit_at(report.x, case, j):
                    continue
                vertex = vertex_lists_cache(inst)[case - 1][j - 1]
                return GrcAssignment(inst.point, case, j, vertex,
                                     YMonomial(*vertex), bid, report.x,
                                     report.objective)
    # restricted search over the four target vertices, block order
    best = simplex_solve(inst)
    for case in (1, 2, 3, 4):
        j = TARGET_VERTEX[case]
        restricted = _restricted_optimum(inst, case, j)
        if restricted is not None and restricted.objective == best.objective:
            offset = sum(BLOCK_SIZES[:case - 1])
            size = BLOCK_SIZES[case - 1]
            lam = []
            it = iter(restricted.x)
            for k in range(18):
                if offset <= k < offset + size:
                    lam.append(Fraction(1) if k == var_index(case, j) else Fraction(0))
                else:
                    lam.append(next(it))
            vertex = vertex_lists_cache(inst)[case - 1][j - 1]
            return GrcAssignment(inst.point, case, j, vertex,
                                 YMonomial(*vertex), "search", tuple(lam),
                                 best.objective)
    raise NoVertexOptimum(
        f"no optimal solution at {inst.point} pins a target vertex")


_VERTEX_CACHE: Dict[Tuple[int, int], Tuple[Tuple[Point, ...], ...]] = {}


def vertex_lists_cache(inst: LPInstance) -> Tuple[Tuple[Point, ...], ...]:
    if inst.spec not in _VERTEX_CACHE:
        _VERTEX_CACHE[inst.spec] = vertex_lists(SystemSpec(*inst.spec))
    return _VERTEX_CACHE[inst.spec]


def grc_partition(spec: SystemSpec, lift: Liftings = DEFAULT_LIFTINGS,
                  delta_vec: Sequence[Fraction] = DEFAULT_PERTURBATION
                  ) -> GrcPartitionResult:
    """Assign every lattice point to a block via its LP optimum."""
    spec = SystemSpec(*spec).validate()
    report = validate_liftings(lift)
    if not report.passed:
        raise DiffresError(f"liftings violate: {', '.join(report.violations)}")
    points = lattice_points(spec, delta_vec)
    assignments: Dict[Point, GrcAssignment] = {}
    buckets: Dict[int, List[YMonomial]] = {1: [], 2: [], 3: [], 4: []}
    for q in points:
        inst = build_lp(q, spec, lift, delta_vec)
        assignment = _assign_point(inst)
        assignments[q] = assignment
        monomial = YMonomial(q[0] - 1, q[1] - 1, q[2] - 1)
        buckets[assignment.case].append(monomial)
    partition = Partition(
        *(MonomialSet.of(buckets[i], f"S{i}") for i in (1, 2, 3, 4)),
        provenance="LPDriven")
    partition.validate_cover(column_set(spec))
    return GrcPartitionResult(partition, assignments, lift,
                              tuple(Fraction(d) for d in delta_vec))


# --- moves and matrix assembly ----------------------------------------------

# Moves that turn the LP partition for degrees (2, 2) with the default
# liftings into the divisibility partition: (monomial, from block, to block).
MOVES_TO_DIVISIBILITY_2_2: Tuple[Tuple[YMonomial, int, int], ...] = (
    (YMonomial(3, 1, 1), 3, 1),
    (YMonomial(2, 1, 1), 3, 1),
    (YMonomial(2, 0, 1), 4, 3),
    (YMonomial(2, 1, 0), 4, 3),
    (YMonomial(3, 0, 0), 4, 3),
    (YMonomial(2, 0, 0), 4, 3),
    (YMonomial(1, 1, 1), 4, 1),
    (YMonomial(0, 1, 1), 4, 1),
)


def _row_polys(spec: SystemSpec) -> Dict[str, DiffPoly]:
    f1, f2 = generic_system(spec)
    return {DF1: delta(f1), DF2: delta(f2), F1: f1, F2: f2}


def apply_moves(part: Partition, moves: Sequence[Tuple[YMonomial, int, int]],
                E: MonomialSet, mm: MainMonomials) -> Partition:
    """Relocate monomials between blocks, validating each move.

    A move is legal when the destination's main monomial divides the moved
    monomial and every monomial of (moved / mm) times the destination
    polynomial stays inside the column set.
    """
    spec = _spec_from_mm(mm)
    polys = _row_polys(spec)
    block_poly = {1: DF1, 2: DF2, 3: F1, 4: F2}
    mm_by_block = dict(zip((1, 2, 3, 4), mm.as_tuple()))
    sets = {i + 1: list(s.elems) for i, s in enumerate(part.sets())}
    col_set = E.as_set()
    for monomial, src, dst in moves:
        monomial = YMonomial(*monomial)
        if monomial not in sets[src]:
            raise IllegalMove(
                f"{ym_render(monomial)} is not currently in S{src}")
        target_mm = mm_by_block[dst]
        if not ym_divides(target_mm, monomial):
            raise IllegalMove(
                f"main monomial {ym_render(target_mm)} of block {dst} does "
                f"not divide {ym_render(monomial)}")
        mult = ym_div(monomial, target_mm)
        for m in support(polys[block_poly[dst]]):
            shifted = ym_mul(m, mult)
            if shifted not in col_set:
                raise IllegalMove(
                    f"moving {ym_render(monomial)} to S{dst} pushes "
                    f"{ym_render(shifted)} outside the column set")
        sets[src].remove(monomial)
        sets[dst].append(monomial)
    return Partition(
        *(MonomialSet.of(sets[i], f"S{i}") for i in (1, 2, 3, 4)),
        provenance=part.provenance + "+moves")


def _spec_from_mm(mm: MainMonomials) -> SystemSpec:
    return SystemSpec(mm.mm3.ey, mm.mm2.ey1).validate()


def build_sparse_matrix(part: Partition, spec: SystemSpec) -> PolyMatrix:
    """Square matrix with one row per column monomial, per the partition.

    The row for a monomial in block i is (monomial / mm_i) times the block's
    polynomial; closure into the column set is enforced entry by entry.
    """
    spec = SystemSpec(*spec).validate()
    mm = default_main_monomials(spec)
    polys = _row_polys(spec)
    mm_by_block = dict(zip(SQUARE_BLOCK_ORDER, (mm.mm1, mm.mm2, mm.mm3, mm.mm4)))
    cols = sorted(column_set(spec), key=ym_key, reverse=True)

    row_plan: List[Tuple[RowLabel, DiffPoly]] = []
    block_counts = []
    for tag, block_set in zip(SQUARE_BLOCK_ORDER, part.sets()):
        members = sorted(block_set, key=ym_key, reverse=True)
        block_counts.append(len(members))
        for monomial in members:
            if not ym_divides(mm_by_block[tag], monomial):
                raise ClosureViolation(
                    f"main monomial of {tag} does not divide "
                    f"{ym_render(monomial)}")
            mult = ym_div(monomial, mm_by_block[tag])
            row_plan.append((RowLabel(tag, mult), polys[tag]))

    entries = _fill_rows(row_plan, cols)
    matrix = PolyMatrix([r for r, _ in row_plan], cols, entries, polys,
                        meta={"kind": "sparse", "spec": [spec.d1, spec.d2],
                              "provenance": part.provenance,
                              "block_counts": block_counts})
    assert matrix.nrows == matrix.ncols == spec.N
    return matrix
