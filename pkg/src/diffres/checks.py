"""Named verification suites.

Each suite is the executable form of one acceptance criterion: it returns a
CheckReport carrying pass/fail, witness data (seeds, counts, values) and its
runtime, and is deterministic given the seed.  The CLI `check` command and
the acceptance tests both run through here, so there is exactly one
implementation of every criterion.

Reports are produced sequentially and order-normalized by name before
emission; nothing in a check depends on when any other check runs, so a
worker pool may execute them concurrently without changing the output.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import lp
from .certificate import (certify, ranking_specialization,
                          unique_monomial_coefficient)
from .determinant import (common_zero_specialization, det_laplace,
                          det_specialized, det_symbolic, nonzero_random_probe,
                          random_specialization)
from .diffsys import SystemSpec, YMonomial, system_symbols, ym_render
from .errors import DiffresError
from .matrices import build_carra_ferro, build_square_matrix, zero_columns
from .monomials import (column_set, default_main_monomials,
                        multiplier_sizes, partition_divisibility)
from .oracle import eliminate_iterated
from .sparse import (CASE_BASES, DEFAULT_LIFTINGS,
                     MOVES_TO_DIVISIBILITY_2_2, apply_moves, build_lp,
                     build_sparse_matrix, grc_partition, lattice_points,
                     simplex_solve, validate_liftings, verify_basis)
from .symbols import CoeffSymbol
from .sympoly import Specialization


@dataclass
class CheckReport:
    name: str
    spec: Optional[Tuple[int, int]]
    status: str                    # "pass" | "fail"
    witness: Dict[str, object] = field(default_factory=dict)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def line(self) -> str:
        spec = f" d={self.spec}" if self.spec else ""
        return f"[{self.status.upper():4}] {self.name}{spec}  ({self.runtime:.2f}s)"


def _report(name: str, spec, fn: Callable[[], Dict[str, object]]) -> CheckReport:
    start = time.perf_counter()
    try:
        witness = fn()
        status = "pass"
    except AssertionError as exc:
        witness = {"error": str(exc)}
        status = "fail"
    return CheckReport(name, spec, status, witness,
                       runtime=time.perf_counter() - start)


def _random_point(rng: random.Random) -> Tuple[Fraction, Fraction, Fraction]:
    def coord() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return (coord(), coord(), coord())


VANISHING_SPECS = ((1, 1), (1, 2), (2, 2), (2, 3))
CERTIFICATE_SPECS = ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3))


# --- criterion 1 -------------------------------------------------------------

def check_sizes(seed: int = 0) -> List[CheckReport]:
    def body() -> Dict[str, object]:
        for d1 in range(1, 7):
            for d2 in range(d1, 7):
                spec = SystemSpec(d1, d2)
                matrix = build_square_matrix(spec)
                n = spec.N
                assert matrix.nrows == matrix.ncols == n, \
                    f"{(d1, d2)}: shape {matrix.nrows}x{matrix.ncols} != {n}"
                assert n == (spec.D + 1) ** 2 == 4 * (d1 + d2 - 1) ** 2
                counts = tuple(matrix.meta["block_counts"])
                assert sum(counts) == n, f"{(d1, d2)}: blocks {counts}"
                assert counts == multiplier_sizes(spec)
        m22 = build_square_matrix(SystemSpec(2, 2))
        assert m22.nrows == 36
        assert tuple(m22.meta["block_counts"]) == (10, 10, 10, 6)
        return {"specs": 21, "reference": {"d": [2, 2], "N": 36,
                                           "blocks": [10, 10, 10, 6]}}
    return [_report("sizes", None, body)]


# --- criterion 2 -------------------------------------------------------------

def check_carra_ferro(seed: int = 0) -> List[CheckReport]:
    def body() -> Dict[str, object]:
        matrix = build_carra_ferro(2, 2, 1, 1)
        meta = matrix.meta
        assert (matrix.nrows, matrix.ncols) == (80, 56), \
            f"shape {matrix.nrows}x{matrix.ncols}"
        assert meta["D"] == 5 and meta["L"] == 56
        assert meta["L1"] == meta["L2"] == 20
        zeros = zero_columns(matrix)
        assert YMonomial(0, 0, 5) in zeros, "column y2^5 is not identically zero"
        assert matrix.cols[0] == YMonomial(0, 0, 5)
        return {"shape": [80, 56], "zero_columns": [ym_render(c) for c in zeros]}
    return [_report("carra-ferro", (2, 2), body)]


# --- criterion 3 -------------------------------------------------------------

def check_certificate(seed: int = 0) -> List[CheckReport]:
    reports = []
    for d in CERTIFICATE_SPECS:
        def body(d=d) -> Dict[str, object]:
            spec = SystemSpec(*d)
            transformed, cert = certify(spec)
            n1, n2, n3, n4 = cert.counts
            assert sum(cert.counts) == spec.N
            coeff = unique_monomial_coefficient(transformed, cert)
            units = cert.unit_product()
            assert units == Fraction(spec.d1) ** n1, \
                f"unit product {units} != d1^n1"
            assert coeff / units in (1, -1), \
                f"normalized coefficient {coeff / units} is not a sign"
            if d == (2, 2):
                expected = {
                    CoeffSymbol("a", 0, 2, 0): 10,   # top coefficient of f1
                    CoeffSymbol("b", 0, 2, 1): 10,   # derivative of f2's top
                    CoeffSymbol("a", 2, 0, 0): 10,   # pure-y coefficient of f1
                    CoeffSymbol("b", 0, 0, 0): 6,    # constant of f2
                }
                assert dict(cert.unique_monomial) == expected, \
                    f"unique monomial {dict(cert.unique_monomial)}"
            rank_spec = ranking_specialization(spec)
            assert det_specialized(transformed, rank_spec) != 0, \
                "ranking specialization killed the determinant"
            return {"counts": list(cert.counts), "coefficient": str(coeff),
                    "sign": cert.sign}
        reports.append(_report("certificate", d, body))
    return reports


# --- criteria 4 and 5 --------------------------------------------------------

def check_vanishing(seed: int = 0, trials: int = 100,
                    matrix_factory=build_square_matrix,
                    label: str = "vanishing") -> List[CheckReport]:
    reports = []
    for d in VANISHING_SPECS:
        def body(d=d) -> Dict[str, object]:
            spec = SystemSpec(*d)
            matrix = matrix_factory(spec)
            rng = random.Random(seed * 7919 + d[0] * 101 + d[1])
            for trial in range(trials):
                point = _random_point(rng)
                s = common_zero_specialization(spec, point, rng_seed=seed + trial)
                value = det_specialized(matrix, s)
                assert value == 0, \
                    f"trial {trial} at point {point}: det = {value}"
            return {"trials": trials, "seed": seed}
        reports.append(_report(label, d, body))
    return reports


def check_nonvanishing(seed: int = 0,
                       matrix_factory=build_square_matrix,
                       label: str = "nonvanishing") -> List[CheckReport]:
    reports = []
    for d in VANISHING_SPECS:
        def body(d=d) -> Dict[str, object]:
            spec = SystemSpec(*d)
            matrix = matrix_factory(spec)
            ok, witness = nonzero_random_probe(matrix, spec, seed=seed)
            assert ok, f"ten random specializations all vanished: {witness}"
            return witness
        reports.append(_report(label, d, body))
    return reports


# --- criterion 6 -------------------------------------------------------------

def _specialization_from(spec: SystemSpec,
                         values: Dict[CoeffSymbol, int]) -> Specialization:
    universe = system_symbols(spec)
    table = {s: Fraction(0) for s in universe}
    table.update({s: Fraction(v) for s, v in values.items()})
    return Specialization(table, universe)


def check_linear_case(seed: int = 0) -> List[CheckReport]:
    def body() -> Dict[str, object]:
        spec = SystemSpec(1, 1)
        matrix = build_square_matrix(spec)
        assert [r.poly for r in matrix.rows] == ["f1'", "f2'", "f1", "f2"]
        assert list(matrix.cols) == [YMonomial(0, 0, 1), YMonomial(0, 1, 0),
                                     YMonomial(1, 0, 0), YMonomial(0, 0, 0)]
        # f1 = y1 + 1, f2 = y1 + y, every derivative symbol zero
        s1 = _specialization_from(spec, {
            CoeffSymbol("a", 0, 1, 0): 1, CoeffSymbol("a", 0, 0, 0): 1,
            CoeffSymbol("b", 0, 1, 0): 1, CoeffSymbol("b", 1, 0, 0): 1})
        v1 = det_specialized(matrix, s1)
        assert abs(v1) == 1, f"fixture determinant {v1}"
        # f1 = y1 + y, f2 = y1 - y: common zero at the origin
        s2 = _specialization_from(spec, {
            CoeffSymbol("a", 0, 1, 0): 1, CoeffSymbol("a", 1, 0, 0): 1,
            CoeffSymbol("b", 0, 1, 0): 1, CoeffSymbol("b", 1, 0, 0): -1})
        assert det_specialized(matrix, s2) == 0
        symbolic = det_symbolic(matrix)
        assert symbolic.total_degree() == 4
        grid = [[matrix.entry(i, j) for j in range(4)] for i in range(4)]
        assert symbolic == det_laplace(grid), "two symbolic routes disagree"
        for trial in range(50):
            s = random_specialization(spec, seed + 1000 + trial)
            assert symbolic.evaluate(s) == det_specialized(matrix, s), \
                f"trial {trial}: symbolic and specialized paths disagree"
        return {"fixture_value": str(v1), "degree": symbolic.total_degree(),
                "terms": len(symbolic)}
    return [_report("linear-case", (1, 1), body)]


# --- criterion 7 -------------------------------------------------------------

def check_lp_partition(seed: int = 0) -> List[CheckReport]:
    def body() -> Dict[str, object]:
        spec = SystemSpec(2, 2)
        lift_report = validate_liftings(DEFAULT_LIFTINGS)
        assert lift_report.passed, f"liftings violate {lift_report.violations}"

        points = lattice_points(spec)
        E = column_set(spec)
        shifted = sorted(((m.ey + 1, m.ey1 + 1, m.ey2 + 1) for m in E),
                         key=lambda p: (sum(p), p[2], p[1], p[0]))
        assert len(points) == 36 and points == shifted, \
            "lattice points differ from the shifted column set"

        result = grc_partition(spec)
        result.partition.validate_cover(E)
        mm = default_main_monomials(spec)
        moved = apply_moves(result.partition, MOVES_TO_DIVISIBILITY_2_2, E, mm)
        divis = partition_divisibility(E, mm)
        assert all(a.as_set() == b.as_set()
                   for a, b in zip(moved.sets(), divis.sets())), \
            "moves do not reach the divisibility partition"

        rearranged = build_sparse_matrix(moved, spec)
        square = build_square_matrix(spec)
        assert rearranged.row_label_map() == square.row_label_map(), \
            "rearranged matrix differs from the square construction"

        raw = build_sparse_matrix(result.partition, spec)
        rng = random.Random(seed)
        for trial in range(100):
            s = common_zero_specialization(spec, _random_point(rng),
                                           rng_seed=seed + trial)
            assert det_specialized(raw, s) == 0, f"raw matrix trial {trial}"
        ok, witness = nonzero_random_probe(raw, spec, seed=seed)
        assert ok, "raw LP matrix vanished on ten random specializations"
        return {"partition_sizes": list(result.partition.sizes()),
                "moves": len(MOVES_TO_DIVISIBILITY_2_2),
                "nonzero_witness": witness}
    return [_report("lp-partition", (2, 2), body)]


# --- criterion 8 -------------------------------------------------------------

def check_basis_certification(seed: int = 0) -> List[CheckReport]:
    def body() -> Dict[str, object]:
        spec = SystemSpec(2, 2)
        points = lattice_points(spec)
        inst0 = build_lp(points[0], spec, DEFAULT_LIFTINGS)
        assert lp.matrix_rank(inst0.A) == 7
        b11 = next(labels for case, bid, labels in CASE_BASES if bid == "1.1")
        cols = [inst0.labels.index(l) for l in b11]
        basis_matrix = [[inst0.A[i][j] for j in cols] for i in range(7)]
        assert lp.matrix_rank(basis_matrix) == 7
        certified = {}
        for q in points:
            inst = build_lp(q, spec, DEFAULT_LIFTINGS)
            best = simplex_solve(inst)
            found = None
            for case, bid, labels in CASE_BASES:
                try:
                    report = verify_basis(inst, labels)
                except DiffresError:
                    continue
                if report.feasible and report.optimal:
                    assert report.objective == best.objective, \
                        f"{q}: certified objective differs from the solver"
                    found = bid
                    break
            assert found is not None, f"no certified basis covers {q}"
            certified[q] = found
        return {"points": len(points),
                "bases_used": sorted(set(certified.values()))}
    return [_report("basis-certification", (2, 2), body)]


# --- criterion 9 -------------------------------------------------------------

def check_oracle(seed: int = 0) -> List[CheckReport]:
    def body() -> Dict[str, object]:
        spec = SystemSpec(1, 1)
        matrix = build_square_matrix(spec)
        candidate = eliminate_iterated(spec)
        assert not candidate.is_zero()
        rng = random.Random(seed)
        for trial in range(100):
            s = common_zero_specialization(spec, _random_point(rng),
                                           rng_seed=seed + trial)
            v_oracle = candidate.evaluate(s)
            v_det = det_specialized(matrix, s)
            assert v_oracle == 0 and v_det == 0, \
                f"trial {trial}: oracle {v_oracle}, det {v_det}"
        generic = random_specialization(spec, seed + 424242)
        assert candidate.evaluate(generic) != 0
        assert det_specialized(matrix, generic) != 0
        return {"trials": 100, "oracle_terms": len(candidate)}
    return [_report("oracle", (1, 1), body)]


# --- criterion 10 (optional stretch) ----------------------------------------

def check_stretch(seed: int = 0, cap_seconds: float = 600.0) -> List[CheckReport]:
    def body() -> Dict[str, object]:
        from .stretch import resultant_factor_2_2
        try:
            factor, cofactor = resultant_factor_2_2(time_budget=cap_seconds)
        except (TimeoutError, DiffresError) as exc:
            raise AssertionError(f"expansion did not complete: {exc}") from exc
        assert factor.total_degree() == 12, f"degree {factor.total_degree()}"
        assert len(factor) == 3210, f"term count {len(factor)}"
        return {"degree": factor.total_degree(), "terms": len(factor),
                "cofactor_terms": len(cofactor)}
    return [_report("stretch", (2, 2), body)]


SUITES: Dict[str, Callable[[int], List[CheckReport]]] = {
    "sizes": check_sizes,
    "carra-ferro": check_carra_ferro,
    "certificate": check_certificate,
    "vanishing": check_vanishing,
    "nonvanishing": check_nonvanishing,
    "linear": check_linear_case,
    "lp-partition": check_lp_partition,
    "basis": check_basis_certification,
    "oracle": check_oracle,
}

OPTIONAL_SUITES: Dict[str, Callable[[int], List[CheckReport]]] = {
    "stretch": check_stretch,
}


def run_checks(suite: str = "all", seed: int = 0) -> List[CheckReport]:
    """Run one named suite, or every non-optional one."""
    if suite == "all":
        selected = list(SUITES.values())
    elif suite in SUITES:
        selected = [SUITES[suite]]
    elif suite in OPTIONAL_SUITES:
        selected = [OPTIONAL_SUITES[suite]]
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from "
                         f"{sorted(SUITES) + sorted(OPTIONAL_SUITES)}")
    reports: List[CheckReport] = []
    for fn in selected:
        reports.extend(fn(seed))
    reports.sort(key=lambda r: (r.name, r.spec or (0, 0)))
    return reports
