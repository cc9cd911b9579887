"""Square and rectangular matrix builders."""

import json
from fractions import Fraction

import pytest

from diffres import (PolyMatrix, Specialization, SystemSpec, YMonomial,
                     bset, build_carra_ferro, build_square_matrix,
                     carra_ferro_shape, column_set, system_symbols,
                     zero_columns)
from diffres.diffsys import YM_ONE
from diffres.matrices import DF1, DF2, F1, F2, RowLabel


class TestSquareMatrix:
    def test_degree_one_layout(self):
        M = build_square_matrix(SystemSpec(1, 1))
        assert [r.poly for r in M.rows] == [DF1, DF2, F1, F2]
        assert all(r.mult == YM_ONE for r in M.rows)
        assert list(M.cols) == [YMonomial(0, 0, 1), YMonomial(0, 1, 0),
                                YMonomial(1, 0, 0), YM_ONE]
        f1_row = [M.entry(2, j).render() for j in range(4)]
        assert f1_row == ["0", "a(0,1)", "a(1,0)", "a(0,0)"]

    def test_reference_blocks(self):
        M = build_square_matrix(SystemSpec(2, 2))
        assert M.nrows == M.ncols == 36
        assert M.meta["block_counts"] == [10, 10, 10, 6]

    def test_sixteen_by_sixteen(self):
        M = build_square_matrix(SystemSpec(1, 2))
        assert M.nrows == M.ncols == 16

    def test_squareness_all_small_specs(self):
        for d1 in range(1, 7):
            for d2 in range(d1, 7):
                spec = SystemSpec(d1, d2)
                M = build_square_matrix(spec)
                assert M.nrows == M.ncols == spec.N

    def test_entries_rederive_from_row_polynomials(self):
        spec = SystemSpec(2, 3)
        M = build_square_matrix(spec)
        for i, label in enumerate(M.rows):
            shifted = M.polys[label.poly].shift(label.mult)
            for j, col in enumerate(M.cols):
                assert M.entry(i, j) == shifted.coefficient(col)

    def test_entries_are_small_integer_linear_forms(self):
        for d1, d2 in ((1, 2), (2, 2), (3, 4)):
            M = build_square_matrix(SystemSpec(d1, d2))
            for v in M.entries.values():
                assert v.total_degree() == 1
                for _, c in v.terms():
                    assert c.denominator == 1
                    assert abs(c) <= max(d1, d2)

    def test_block_column_coverage(self):
        # the derivative block alone already touches every column
        spec = SystemSpec(2, 2)
        M = build_square_matrix(spec)
        E = column_set(spec).as_set()
        df1_cols = set()
        for (i, j) in M.entries:
            if M.rows[i].poly == DF1:
                df1_cols.add(M.cols[j])
        assert df1_cols == E

    def test_f1_band_structure(self):
        # support of the f1 block equals the banded union of one-variable
        # boxes, a strict subset of the columns once y2 bands are counted
        spec = SystemSpec(2, 3)
        d1, D = spec.d1, spec.D
        M = build_square_matrix(spec)
        got = set()
        for (i, j) in M.entries:
            if M.rows[i].poly == F1:
                got.add(M.cols[j])
        expected = set()
        for k in range(d1 + spec.d2):
            expected |= bset(2, D - k).scaled(YMonomial(0, k, 0)).as_set()
        for k in range(2 * d1 - 1):
            expected |= bset(2, D - k - 1).scaled(YMonomial(0, k, 1)).as_set()
        assert got == expected
        assert got <= column_set(spec).as_set()


class TestCarraFerro:
    def test_reference_counterexample_shape(self):
        M = build_carra_ferro(2, 2, 1, 1)
        assert (M.nrows, M.ncols) == (80, 56)
        assert M.meta["D"] == 5
        assert M.meta["L1"] == M.meta["L2"] == 20

    def test_zero_column_is_exactly_top_power(self):
        M = build_carra_ferro(2, 2, 1, 1)
        assert zero_columns(M) == [YMonomial(0, 0, 5)]
        assert M.cols[0] == YMonomial(0, 0, 5)

    def test_degree_one_shape(self):
        shape = carra_ferro_shape(1, 1, 1, 1)
        assert shape["D"] == 1 and shape["L"] == 4
        M = build_carra_ferro(1, 1, 1, 1)
        assert (M.nrows, M.ncols) == (4, 4)

    def test_degree_one_matches_square_matrix_rows(self):
        cf = build_carra_ferro(1, 1, 1, 1)
        sq = build_square_matrix(SystemSpec(1, 1))
        # same four row polynomials, different block order
        cf_rows = {(r.poly.replace("p", "f"), r.mult): cf.row_entries(i)
                   for i, r in enumerate(cf.rows)}
        sq_rows = {(r.poly, r.mult): sq.row_entries(i)
                   for i, r in enumerate(sq.rows)}
        assert set(cf_rows) == set(sq_rows)
        for key in cf_rows:
            assert cf_rows[key] == sq_rows[key]

    def test_row_block_order(self):
        M = build_carra_ferro(2, 2, 1, 1)
        order = [r.poly for r in M.rows]
        assert order[:20] == ["p1'"] * 20
        assert order[20:40] == ["p1"] * 20
        assert order[40:60] == ["p2'"] * 20
        assert order[60:] == ["p2"] * 20

    def test_rejects_high_orders(self):
        from diffres import DiffresError
        with pytest.raises(DiffresError):
            build_carra_ferro(2, 2, 2, 1)

    def test_zero_matrix_has_all_columns_zero(self):
        empty = PolyMatrix([RowLabel(F1, YM_ONE)], [YM_ONE, YMonomial(1, 0, 0)],
                           {}, {})
        assert zero_columns(empty) == [YM_ONE, YMonomial(1, 0, 0)]


class TestExports:
    def test_json_schema(self):
        M = build_square_matrix(SystemSpec(1, 1))
        data = M.to_json()
        assert data["shape"] == [4, 4]
        assert data["rows"][0] == {"poly": "f1'", "multiplier": [0, 0, 0]}
        assert data["cols"][0] == [0, 0, 1]
        assert all(isinstance(e[2], str) for e in data["entries"])
        json.dumps(data)  # must be serializable as-is

    def test_csv_export_after_specialization(self):
        spec = SystemSpec(1, 1)
        M = build_square_matrix(spec)
        universe = system_symbols(spec)
        s = Specialization({sym: Fraction(1) for sym in universe}, universe)
        text = M.to_csv(s)
        lines = text.strip().split("\n")
        assert lines[0].startswith("row,y^0*y1^0*y2^1")
        assert len(lines) == 5
        assert lines[3].split(",")[0] == "1*f1"
