"""Nonsingularity certificate for the square matrix.

The certificate is produced in two stages.  First a substitution replaces
the one derivative symbol that shares an entry with the step-one symbol by a
fresh indeterminate minus d1 times that symbol, which cancels the overlap
and leaves every other entry byte-identical.  Then four elimination steps
peel off row blocks: at each step the designated symbol must occur in
exactly one remaining entry of each row of its block and nowhere else in the
remaining matrix.  The collected (row, column) pairs form a transversal,
and the product of the designated symbols raised to the block sizes is a
monomial that no other permutation of the determinant expansion can
produce.  Any wrong occurrence count is a fatal CertificateFailure: the
procedure is a proof artifact, never downgraded to a warning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .errors import CertificateFailure
from .diffsys import SystemSpec, YMonomial, system_symbols, ym_render
from .matrices import DF1, DF2, F1, F2, PolyMatrix, RowLabel
from .symbols import CoeffSymbol
from .sympoly import Monomial, Specialization, SymPoly, mono_make


def substitution_symbol(spec: SystemSpec) -> CoeffSymbol:
    """The order-1 symbol replaced before elimination."""
    return CoeffSymbol("a", spec.d1 - 1, 1, 1)


def fresh_symbol(spec: SystemSpec) -> CoeffSymbol:
    return CoeffSymbol("a", spec.d1 - 1, 1, 0, fresh=True)


def step_symbols(spec: SystemSpec) -> List[Tuple[CoeffSymbol, str]]:
    """(symbol, row block) per elimination step, in execution order."""
    spec = SystemSpec(*spec).validate()
    return [
        (CoeffSymbol("a", spec.d1, 0, 0), F1),    # constant-in-derivative row coefficient of y^d1
        (CoeffSymbol("a", 0, spec.d1, 0), DF1),   # appears as d1 * symbol at the y2-columns
        (CoeffSymbol("b", 0, 0, 0), F2),          # constant coefficient
        (CoeffSymbol("b", 0, spec.d2, 1), DF2),   # derivative of the top coefficient
    ]


def transform_12(matrix: PolyMatrix, spec: SystemSpec) -> PolyMatrix:
    """Replace the overlap symbol by (fresh - d1 * step-one symbol).

    Idempotent in effect: once applied the replaced symbol is gone, so a
    second application changes nothing.
    """
    spec = SystemSpec(*spec).validate()
    old = substitution_symbol(spec)
    replacement = (SymPoly.symbol(fresh_symbol(spec))
                   - spec.d1 * SymPoly.symbol(step_symbols(spec)[0][0]))
    return matrix.substitute({old: replacement})


@dataclass(frozen=True)
class CertStep:
    symbol: CoeffSymbol
    block: str
    deleted_rows: Tuple[RowLabel, ...]
    deleted_cols: Tuple[YMonomial, ...]
    pairs: Tuple[Tuple[int, int], ...]        # (row index, col index)
    unit_coefficients: Tuple[Fraction, ...]   # factor of the symbol per entry


@dataclass(frozen=True)
class Certificate:
    steps: Tuple[CertStep, ...]
    unique_monomial: Monomial
    transversal: Dict[RowLabel, YMonomial]
    permutation: Tuple[int, ...]   # row index -> column index
    sign: int
    counts: Tuple[int, int, int, int]  # (n1, n2, n3, n4) by row block df1, df2, f1, f2

    def unit_product(self) -> Fraction:
        out = Fraction(1)
        for step in self.steps:
            for c in step.unit_coefficients:
                out *= c
        return out


def _symbol_occurrences(entry: SymPoly, sym: CoeffSymbol):
    """(linear coefficient, clean) for one entry; clean means the symbol only
    appears as a plain degree-one term."""
    linear = entry.coefficient(mono_make({sym: 1}))
    clean = True
    for mono, _ in entry.terms():
        present = any(s == sym for s, _ in mono)
        if present and mono != mono_make({sym: 1}):
            clean = False
    return linear, clean


def _permutation_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def eliminate(matrix: PolyMatrix, spec: SystemSpec) -> Certificate:
    """Run the four elimination steps and emit the transversal.

    Works on any matrix whose rows are labeled multiples of the four
    polynomials: the standard block layout, or any rearranged partition
    with the same main monomials, which is what makes row moves between
    blocks machine-checkable.
    """
    spec = SystemSpec(*spec).validate()
    n = matrix.nrows
    if n != matrix.ncols:
        raise CertificateFailure(f"matrix is {matrix.nrows}x{matrix.ncols}, not square")

    # index entries by row for the occurrence scans
    row_entries: List[Dict[int, SymPoly]] = [dict() for _ in range(n)]
    for (i, j), v in matrix.entries.items():
        row_entries[i][j] = v
    entry_symbols: Dict[Tuple[int, int], set] = {
        (i, j): v.symbols() for (i, j), v in matrix.entries.items()}

    alive_rows = set(range(n))
    alive_cols = set(range(n))
    steps: List[CertStep] = []
    counts: List[int] = []
    perm: Dict[int, int] = {}

    for sym, block in step_symbols(spec):
        block_rows = sorted(i for i in alive_rows
                            if matrix.rows[i].poly == block)
        pairs: List[Tuple[int, int]] = []
        units: List[Fraction] = []
        for i in block_rows:
            hits = [j for j, v in row_entries[i].items()
                    if j in alive_cols and sym in entry_symbols[(i, j)]]
            if len(hits) != 1:
                raise CertificateFailure(
                    f"step symbol {sym} occurs {len(hits)} times in row "
                    f"{matrix.rows[i].render()}, expected exactly once")
            j = hits[0]
            unit, clean = _symbol_occurrences(row_entries[i][j], sym)
            if not clean or unit == 0:
                raise CertificateFailure(
                    f"step symbol {sym} does not enter entry "
                    f"({matrix.rows[i].render()}, {ym_render(matrix.cols[j])}) linearly")
            pairs.append((i, j))
            units.append(unit)
        # the symbol must be absent from every other remaining entry
        for i in alive_rows:
            if matrix.rows[i].poly == block:
                continue
            for j, v in row_entries[i].items():
                if j in alive_cols and sym in entry_symbols[(i, j)]:
                    raise CertificateFailure(
                        f"step symbol {sym} leaks into row "
                        f"{matrix.rows[i].render()} at column "
                        f"{ym_render(matrix.cols[j])}")
        cols = [j for _, j in pairs]
        if len(set(cols)) != len(cols):
            raise CertificateFailure(
                f"step symbol {sym} repeats a column inside its block")
        for i, j in pairs:
            perm[i] = j
        alive_rows -= set(i for i, _ in pairs)
        alive_cols -= set(cols)
        counts.append(len(pairs))
        steps.append(CertStep(
            symbol=sym, block=block,
            deleted_rows=tuple(matrix.rows[i] for i, _ in pairs),
            deleted_cols=tuple(matrix.cols[j] for _, j in pairs),
            pairs=tuple(pairs), unit_coefficients=tuple(units)))

    if alive_rows or alive_cols:
        raise CertificateFailure(
            f"{len(alive_rows)} rows / {len(alive_cols)} columns remain after "
            "the four steps")

    unique = mono_make({sym: cnt for (sym, _), cnt
                        in zip(step_symbols(spec), counts)})
    permutation = tuple(perm[i] for i in range(n))
    by_block = dict(zip((F1, DF1, F2, DF2), counts))
    return Certificate(
        steps=tuple(steps),
        unique_monomial=unique,
        transversal={matrix.rows[i]: matrix.cols[j] for i, j in perm.items()},
        permutation=permutation,
        sign=_permutation_sign(permutation),
        counts=(by_block[DF1], by_block[DF2], by_block[F1], by_block[F2]),
    )


def unique_monomial_coefficient(matrix: PolyMatrix, cert: Certificate) -> Fraction:
    """Exact coefficient of the unique monomial in the determinant.

    Equals sign(transversal) times the product of the linear factors with
    which each step symbol enters its transversal entry; its absolute value
    is therefore the product of those unit factors (d1 to the power of the
    second block size), and the remaining sign factor is +-1.
    """
    value = Fraction(cert.sign)
    for step in cert.steps:
        for unit in step.unit_coefficients:
            value *= unit
    if value == 0:
        raise CertificateFailure("transversal product vanished")
    return value


def certify(spec: SystemSpec, matrix: PolyMatrix | None = None) -> Tuple[PolyMatrix, Certificate]:
    """Convenience pipeline: build (or take) the matrix, transform, eliminate."""
    from .matrices import build_square_matrix
    spec = SystemSpec(*spec).validate()
    base = matrix if matrix is not None else build_square_matrix(spec)
    transformed = transform_12(base, spec)
    return transformed, eliminate(transformed, spec)


def ranking_specialization(spec: SystemSpec, t: int = 10 ** 6) -> Specialization:
    """Step symbols get t, t^2, t^3, t^4; every other symbol gets zero.

    Under this assignment the transformed matrix keeps exactly the entries
    that witness the transversal (plus lower-ranked strays), so a nonzero
    determinant isolates the unique monomial's contribution.
    """
    spec = SystemSpec(*spec).validate()
    universe = system_symbols(spec, include_fresh=True)
    values = {s: Fraction(0) for s in universe}
    for power, (sym, _) in enumerate(step_symbols(spec), start=1):
        values[sym] = Fraction(t) ** power
    return Specialization(values, universe)
