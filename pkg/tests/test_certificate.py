"""Substitution, four-step elimination, and the transversal certificate."""

from fractions import Fraction

import pytest

from diffres import (CertificateFailure, CoeffSymbol, SymPoly, SystemSpec,
                     YMonomial, build_square_matrix, build_sparse_matrix,
                     certify, column_set, default_main_monomials,
                     det_specialized, eliminate, grc_partition,
                     partition_divisibility, ranking_specialization,
                     transform_12, unique_monomial_coefficient)
from diffres.certificate import fresh_symbol, substitution_symbol
from diffres.diffsys import YM_ONE, ym_mul
from diffres.monomials import closed_form_sets


class TestTransform:
    def test_targeted_entry_collapses_to_fresh_symbol(self):
        spec = SystemSpec(2, 2)
        M = build_square_matrix(spec)
        Mt = transform_12(M, spec)
        target_col = ym_mul(YMonomial(1, 1, 0), M.rows[0].mult)
        j = M.col_index(target_col)
        before = M.entry(0, j)
        after = Mt.entry(0, j)
        # before: derivative symbol plus d1 times the pure-y coefficient
        assert before == SymPoly.symbol(CoeffSymbol("a", 1, 1, 1)) \
            + 2 * SymPoly.symbol(CoeffSymbol("a", 2, 0, 0))
        assert after == SymPoly.symbol(fresh_symbol(spec))

    def test_all_other_entries_identical(self):
        spec = SystemSpec(2, 2)
        M = build_square_matrix(spec)
        Mt = transform_12(M, spec)
        old = substitution_symbol(spec)
        changed = 0
        for key, value in M.entries.items():
            if old in value.symbols():
                changed += 1
                continue
            assert Mt.entries[key].render() == value.render()
        assert changed == 10  # one entry per derivative-of-f1 row

    def test_double_application_is_stable(self):
        spec = SystemSpec(1, 2)
        Mt = transform_12(build_square_matrix(spec), spec)
        Mtt = transform_12(Mt, spec)
        assert {k: v.render() for k, v in Mt.entries.items()} == \
            {k: v.render() for k, v in Mtt.entries.items()}

    def test_replaced_symbol_is_gone(self):
        spec = SystemSpec(2, 3)
        Mt = transform_12(build_square_matrix(spec), spec)
        assert substitution_symbol(spec) not in Mt.symbols()


class TestEliminate:
    def test_degree_one_transversal(self):
        spec = SystemSpec(1, 1)
        Mt, cert = certify(spec)
        pairing = {r.poly: c for r, c in cert.transversal.items()}
        assert pairing == {
            "f1'": YMonomial(0, 0, 1),
            "f2'": YMonomial(0, 1, 0),
            "f1": YMonomial(1, 0, 0),
            "f2": YM_ONE,
        }
        assert cert.counts == (1, 1, 1, 1)
        assert abs(unique_monomial_coefficient(Mt, cert)) == 1

    def test_reference_exponents_degree_two(self):
        spec = SystemSpec(2, 2)
        Mt, cert = certify(spec)
        assert cert.counts == (10, 10, 10, 6)
        exponents = dict(cert.unique_monomial)
        assert exponents == {
            CoeffSymbol("a", 0, 2, 0): 10,
            CoeffSymbol("b", 0, 2, 1): 10,
            CoeffSymbol("a", 2, 0, 0): 10,
            CoeffSymbol("b", 0, 0, 0): 6,
        }

    def test_succeeds_across_specs(self):
        for d in ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3)):
            Mt, cert = certify(SystemSpec(*d))
            assert sum(cert.counts) == SystemSpec(*d).N
            coeff = unique_monomial_coefficient(Mt, cert)
            assert coeff != 0
            assert abs(coeff) == Fraction(d[0]) ** cert.counts[0]

    def test_step_column_sets_match_closed_forms(self):
        spec = SystemSpec(2, 3)
        Mt, cert = certify(spec)
        m1, m2, t1, t2 = closed_form_sets(spec)
        d1, d2 = spec.d1, spec.d2
        expected = [
            t1.scaled(YMonomial(d1, 0, 0)).as_set(),
            m1.scaled(YMonomial(0, d1 - 1, 1)).as_set(),
            t2.as_set(),
            m2.scaled(YMonomial(0, d2, 0)).as_set(),
        ]
        for step, cols in zip(cert.steps, expected):
            assert set(step.deleted_cols) == cols
        # disjoint and exhaustive
        union = set()
        for step in cert.steps:
            assert union.isdisjoint(step.deleted_cols)
            union |= set(step.deleted_cols)
        assert union == column_set(spec).as_set()

    def test_elimination_requires_transform_first(self):
        spec = SystemSpec(2, 2)
        M = build_square_matrix(spec)
        # without the substitution, the first step symbol still occurs in the
        # derivative rows, which the disjointness scan must catch
        with pytest.raises(CertificateFailure):
            eliminate(M, spec)

    def test_unit_multipliers_are_degree_factors(self):
        spec = SystemSpec(3, 3)
        Mt, cert = certify(spec)
        step2 = cert.steps[1]
        assert set(step2.unit_coefficients) == {Fraction(3)}
        assert cert.unit_product() == Fraction(3) ** cert.counts[0]


class TestRankingCrossCheck:
    def test_ranking_specialization_isolates_unique_monomial(self):
        for d in ((1, 1), (1, 2), (2, 2)):
            spec = SystemSpec(*d)
            Mt, cert = certify(spec)
            s = ranking_specialization(spec, t=10 ** 6)
            value = det_specialized(Mt, s)
            assert value != 0

    def test_unique_coefficient_agrees_with_full_expansion(self):
        # the 4x4 case is small enough to expand symbolically
        from diffres import det_symbolic
        spec = SystemSpec(1, 1)
        Mt, cert = certify(spec)
        full = det_symbolic(Mt)
        assert full.coefficient(cert.unique_monomial) == \
            unique_monomial_coefficient(Mt, cert)


class TestRearrangedMatrices:
    def test_divisibility_partition_matrix_certifies(self):
        spec = SystemSpec(2, 2)
        part = partition_divisibility(column_set(spec),
                                      default_main_monomials(spec))
        rearranged = build_sparse_matrix(part, spec)
        Mt = transform_12(rearranged, spec)
        cert = eliminate(Mt, spec)
        assert cert.counts == (10, 10, 10, 6)

    def test_lp_partition_matrix_certifies(self):
        spec = SystemSpec(2, 2)
        result = grc_partition(spec)
        raw = build_sparse_matrix(result.partition, spec)
        Mt = transform_12(raw, spec)
        cert = eliminate(Mt, spec)
        assert sum(cert.counts) == 36
        assert unique_monomial_coefficient(Mt, cert) != 0
