from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from octoclifford.algebra import ComplexNum, OctonionNum, QuaternionNum, basis, conj, structure_table
from octoclifford.matrix import IntMatrix, identity, span_rank
from octoclifford.reps import (
    complex_basis,
    conj_matrix,
    conj_twisted,
    embed,
    left_matrix,
    mixed_matrix,
    octonion_commutator_defect,
    octonion_right_commutator_defect,
    quaternion_operators,
    right_matrix,
    unembed,
    verify_quaternion_product_rules,
)

from .strategies import elements

DIMS = {"C": 2, "H": 4, "O": 8}

I_SIGMA2 = ((0, 1), (-1, 0))


def block_diag(*blocks):
    n = 2 * len(blocks)
    rows = [[0] * n for _ in range(n)]
    for k, b in enumerate(blocks):
        for r in range(2):
            for c in range(2):
                rows[2 * k + r][2 * k + c] = b[r][c]
    return IntMatrix(tuple(map(tuple, rows)))


def neg(b):
    return tuple(tuple(-x for x in r) for r in b)


class TestEmbedding:
    def test_complex(self):
        assert embed(ComplexNum(3, 2)) == (3, 2)

    def test_quaternion_unit(self):
        assert embed(QuaternionNum.unit(2)) == (0, 0, 1, 0)

    def test_octonion(self):
        assert embed(OctonionNum.one() + OctonionNum.unit(7)) == (1, 0, 0, 0, 0, 0, 0, 1)

    @pytest.mark.parametrize("algebra", ["C", "H", "O"])
    @given(data=st.data())
    def test_round_trip(self, algebra, data):
        x = data.draw(elements(algebra))
        assert unembed(embed(x), algebra) == x

    def test_unembed_dimension_mismatch(self):
        with pytest.raises(ValueError):
            unembed((1, 2, 3), "H")


class TestLeftRightMatrices:
    def test_complex_left(self):
        assert left_matrix("C", 1) == IntMatrix(((0, -1), (1, 0)))

    def test_complex_right_equals_left(self):
        assert right_matrix("C", 1) == left_matrix("C", 1)

    def test_quaternion_left_displayed(self):
        assert left_matrix("H", 1) == IntMatrix(((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0)))

    def test_quaternion_right_displayed(self):
        assert right_matrix("H", 1) == IntMatrix(((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0)))

    def test_octonion_left_e1_block_diagonal(self):
        m = neg(I_SIGMA2)
        assert left_matrix("O", 1) == block_diag(m, m, m, I_SIGMA2)

    def test_octonion_right_e4_pattern3(self):
        # {-1, -1, 1, 1} in the third block layout
        expected = [[0] * 8 for _ in range(8)]
        for (br, bc), s in zip(((0, 2), (1, 3), (2, 0), (3, 1)), (-1, -1, 1, 1)):
            expected[2 * br][2 * bc] = expected[2 * br + 1][2 * bc + 1] = s
        assert right_matrix("O", 4) == IntMatrix(tuple(map(tuple, expected)))

    @pytest.mark.parametrize("algebra,i", [("O", 0), ("O", 8), ("H", 4), ("C", 2)])
    def test_index_out_of_range(self, algebra, i):
        with pytest.raises(IndexError):
            left_matrix(algebra, i)

    @pytest.mark.parametrize("algebra", ["C", "H", "O"])
    def test_entries_are_signed_units(self, algebra):
        for i in range(1, DIMS[algebra]):
            for m in (left_matrix(algebra, i), right_matrix(algebra, i)):
                assert set(m.flat()) <= {-1, 0, 1}

    @pytest.mark.parametrize("algebra", ["C", "H", "O"])
    def test_action_on_basis(self, algebra):
        units = basis(algebra)
        for i in range(1, DIMS[algebra]):
            for x in units:
                assert left_matrix(algebra, i) @ embed(x) == embed(units[i] * x)
                assert right_matrix(algebra, i) @ embed(x) == embed(x * units[i])

    @pytest.mark.parametrize("algebra", ["C", "H", "O"])
    @given(data=st.data())
    def test_action_on_random(self, algebra, data):
        x = data.draw(elements(algebra))
        i = data.draw(st.integers(1, DIMS[algebra] - 1))
        u = basis(algebra)[i]
        assert unembed(left_matrix(algebra, i) @ embed(x), algebra) == u * x
        assert unembed(right_matrix(algebra, i) @ embed(x), algebra) == x * u


class TestComplexConjugation:
    def test_conj_matrix(self):
        assert conj_matrix() == IntMatrix(((1, 0), (0, -1)))

    def test_twisted(self):
        assert conj_twisted(1) == IntMatrix(((0, 1), (1, 0)))

    def test_twisted_action(self):
        z = ComplexNum(2, 5)
        assert conj_twisted(1) @ embed(z) == (5, 2)
        assert conj_twisted(1) @ embed(z) == embed(ComplexNum(0, 1) * conj(z))

    @pytest.mark.parametrize("algebra", ["H", "O"])
    def test_conj_only_complex(self, algebra):
        with pytest.raises(ValueError):
            conj_matrix(algebra)

    def test_complex_basis_rank(self):
        assert span_rank(complex_basis()) == 4


class TestQuaternionMixed:
    def test_mixed_11_squares_to_one(self):
        m = mixed_matrix(1, 1)
        assert m @ m == identity(4)

    def test_mixed_12_on_one(self):
        # e1 . 1 . e2 = e1 e2 = e3
        assert mixed_matrix(1, 2) @ embed(QuaternionNum.one()) == (0, 0, 0, 1)

    def test_full_commutation(self):
        for i, j in product((1, 2, 3), repeat=2):
            assert left_matrix("H", i).commutator(right_matrix("H", j)).is_zero()
            assert mixed_matrix(i, j) == right_matrix("H", j) @ left_matrix("H", i)

    def test_sixteen_independent(self):
        assert span_rank(quaternion_operators()) == 16

    @pytest.mark.parametrize("i,j,k", [(i, j, k) for i in (1, 2, 3) for j in (1, 2, 3) for k in (1, 2, 3) if i != j])
    def test_tl1(self, i, j, k):
        Ei, Ej, Rk = left_matrix("H", i), left_matrix("H", j), right_matrix("H", k)
        assert (Ei @ Ej @ Rk + Ej @ Ei @ Rk).is_zero()

    def test_tl1_coincident_indices_nonzero(self):
        for i, k in product((1, 2, 3), repeat=2):
            E = left_matrix("H", i)
            assert E @ E @ right_matrix("H", k) + E @ E @ right_matrix("H", k) == -2 * right_matrix("H", k)


class TestProductRules:
    report = verify_quaternion_product_rules()

    def test_passes(self):
        assert self.report.passed

    @pytest.mark.parametrize("rule,cases", [("lk1", 9), ("p2", 9), ("kl1", 9)])
    def test_exact_rules_hold_everywhere(self, rule, cases):
        assert len(self.report.printed_exact(rule)) == cases

    def test_il3_printed_form_where_indices_differ(self):
        exact = self.report.printed_exact("il3")
        assert all(i != k for i, j, k in exact)
        assert sorted(self.report.printed_fails("il3")) == sorted(
            (i, j, k) for i, j, k in product((1, 2, 3), repeat=3) if i == k
        )

    def test_il4_printed_form_needs_distinct(self):
        assert sorted(self.report.printed_fails("il4")) == sorted(
            (i, j, k) for i, j, k in product((1, 2, 3), repeat=3) if i == j
        )

    def test_il5_full_form(self):
        assert all(c.full_holds for c in self.report.checks if c.rule == "il5")
        # printed form is exact only when neither index pair coincides
        for c in self.report.checks:
            if c.rule == "il5":
                i, j, m, n = c.indices
                assert c.printed_holds == (i != m and j != n)

    def test_summary_counts(self):
        s = self.report.summary()
        assert s["il3"]["cases"] == 27 and s["il3"]["full_exact"] == 27
        assert s["il5"]["cases"] == 81


class TestOctonionIdentities:
    @pytest.mark.parametrize("i,j", list(product(range(1, 8), repeat=2)))
    def test_defects_vanish(self, i, j):
        assert octonion_commutator_defect(i, j).is_zero()
        assert octonion_right_commutator_defect(i, j).is_zero()

    def test_defect_examples(self):
        assert octonion_commutator_defect(1, 2).is_zero()
        assert octonion_commutator_defect(3, 3).is_zero()
        assert octonion_right_commutator_defect(2, 5).is_zero()

    def test_isomorphism_lost(self):
        c = left_matrix("O", 1).commutator(left_matrix("O", 2))
        assert c != 2 * left_matrix("O", 3)

    def test_anticommutators(self):
        one = identity(8)
        for i, j in product(range(1, 8), repeat=2):
            expected = -2 * one if i == j else 0 * one
            assert left_matrix("O", i).anticommutator(left_matrix("O", j)) == expected
            assert right_matrix("O", i).anticommutator(right_matrix("O", j)) == expected

    def test_weak_commutation(self):
        for i in range(1, 8):
            assert left_matrix("O", i) @ right_matrix("O", i) == right_matrix("O", i) @ left_matrix("O", i)
        assert any(
            left_matrix("O", i) @ right_matrix("O", j) != right_matrix("O", j) @ left_matrix("O", i)
            for i, j in product(range(1, 8), repeat=2)
        )

    def test_tl1_octonions(self):
        for i, j, k in product(range(1, 8), repeat=3):
            if i == j:
                continue
            Ei, Ej, Rk = left_matrix("O", i), left_matrix("O", j), right_matrix("O", k)
            assert (Ei @ Ej @ Rk + Ej @ Ei @ Rk).is_zero()

    def test_two_sided_rank(self):
        # computed by exact elimination; the identity is the one missing direction
        ops = [left_matrix("O", i) for i in range(1, 8)] + [right_matrix("O", i) for i in range(1, 8)]
        ops += [left_matrix("O", i) @ right_matrix("O", j) for i, j in product(range(1, 8), repeat=2)]
        assert span_rank(ops) == 63
        assert span_rank(ops + [identity(8)]) == 64

    def test_structure_table_drives_left_matrix(self):
        st = structure_table("O")
        for i, j in product(range(1, 8), repeat=2):
            col = [row[j] for row in left_matrix("O", i).rows]
            if i == j:
                assert col[0] == -1
            else:
                sign, k = st.product(i, j)
                assert col[k] == sign
