import random
from itertools import combinations

import pytest
import sympy

from octoclifford.clifford import (
    NAIVE,
    GammaSet,
    cliff70_set,
    cliff76_set,
    contains_span,
    is_closed,
    quaternion_gamma_set,
    sixth_gamma_search,
    so7_basis,
    so8_basis,
    spin23_basis,
    spin23_listed_basis,
    verify_clifford,
)
from octoclifford.matrix import identity
from octoclifford.reps import left_matrix, quaternion_operators
from octoclifford.words import LEFT, RIGHT, OperatorWord, anticommutator, translate


class TestQuaternionSet:
    gs = quaternion_gamma_set()

    def test_metric(self):
        rep = verify_clifford(self.gs)
        assert rep.passed
        assert rep.metric == [-1, -1, 1, 1, 1]
        assert rep.pairs_checked == 15

    def test_pair_examples(self):
        g = self.gs.generators
        assert anticommutator(g[0], g[0], "H") == -2 * identity(4)
        assert anticommutator(g[2], g[2], "H") == 2 * identity(4)
        assert anticommutator(g[0], g[3], "H").is_zero()

    def test_naive_agrees_for_quaternions(self):
        assert verify_clifford(self.gs, NAIVE).metric == [-1, -1, 1, 1, 1]

    def test_permutation_invariance(self):
        verified = self.gs.verified()
        order = list(range(5))
        random.Random(7).shuffle(order)
        permuted = self.gs.permuted(order)
        assert verify_clifford(permuted).metric == list(verified.permuted(order).metric)


class TestSpin23:
    basis = spin23_basis()

    def test_dimension(self):
        assert self.basis.dimension == 10

    def test_closed(self):
        assert is_closed(self.basis)

    def test_contains_listed_basis(self):
        assert contains_span(self.basis, spin23_listed_basis())
        # and the listed set spans the same space
        assert len(spin23_listed_basis()) == 10

    def test_first_commutator(self):
        assert self.basis.matrices[0] == -2 * left_matrix("H", 1)


class TestSixthGamma:
    rep = sixth_gamma_search()

    def test_no_basis_witness(self):
        assert rep_impossible(self.rep)
        assert self.rep.candidates_tested == 32

    def test_gamma5_excluded(self):
        gammas = quaternion_gamma_set().matrices()
        g5 = gammas[4]
        assert all(g5.anticommutator(g).is_zero() for g in gammas[:4])
        assert not g5.anticommutator(g5).is_zero()
        assert "e1|e3" not in self.rep.anticommuting_basis

    def test_anticommutant_dimension_oracle(self):
        gammas = quaternion_gamma_set().matrices()
        ops = quaternion_operators()
        rows = []
        for g in gammas:
            cols = [op.anticommutator(g).flat() for op in ops]
            rows.extend([c[r] for c in cols] for r in range(16))
        oracle = len(sympy.Matrix(rows).nullspace())
        assert self.rep.subspace_dim == oracle == 0


def rep_impossible(rep):
    return rep.impossible and rep.witnesses == []


class TestCliff70:
    @pytest.mark.parametrize("side", [LEFT, RIGHT])
    def test_metric(self, side):
        rep = verify_clifford(cliff70_set(side))
        assert rep.metric == [-1] * 7

    def test_examples(self):
        e = lambda i: OperatorWord.of((LEFT, i))  # noqa: E731
        r = lambda i: OperatorWord.of((RIGHT, i))  # noqa: E731
        assert anticommutator(e(3), e(3)) == -2 * identity(8)
        assert anticommutator(e(2), e(5)).is_zero()
        assert anticommutator(r(4), r(6)).is_zero()

    def test_bad_side(self):
        with pytest.raises(ValueError):
            cliff70_set("up")


class TestLieBases:
    @pytest.mark.parametrize("side", [LEFT, RIGHT])
    def test_dimensions_and_closure(self, side):
        so7, so8 = so7_basis(side), so8_basis(side)
        assert so7.dimension == 21
        assert so8.dimension == 28
        assert is_closed(so7)
        assert is_closed(so8)

    def test_rank_oracle(self):
        so8 = so8_basis(LEFT)
        assert sympy.Matrix([m.flat() for m in so8.matrices]).rank() == 28


class TestCliff76:
    gs = cliff76_set()

    def test_thirteen_generators(self):
        assert len(self.gs) == 13

    def test_priority_signature(self):
        rep = verify_clifford(self.gs)
        assert rep.passed
        assert rep.pairs_checked == 91
        assert rep.metric == [-1] * 6 + [1] * 7

    def test_examples(self):
        g = self.gs.generators
        assert anticommutator(g[0], g[1]).is_zero()
        assert anticommutator(g[6], g[6]) == 2 * identity(8)

    def test_naive_fails_on_mixed_pair(self):
        rep = verify_clifford(self.gs, NAIVE)
        assert not rep.passed
        assert rep.metric is None
        a, b = rep.first_failure["a"], rep.first_failure["b"]
        assert (a, b) == (0, 6)
        assert a < 6 <= b  # a left generator against a barred one
        assert any(any(r) for r in rep.first_failure["matrix_diff"])

    def test_first_failure_is_lexicographically_smallest(self):
        rep = verify_clifford(self.gs, NAIVE)
        fa, fb = rep.first_failure["a"], rep.first_failure["b"]
        from octoclifford.words import naive_anticommutator

        for a in range(13):
            for b in range(a, 13):
                if (a, b) >= (fa, fb):
                    break
                ac = naive_anticommutator(self.gs.generators[a], self.gs.generators[b])
                if a == b:
                    assert ac.scalar_multiple_of_identity() in (2, -2)
                else:
                    assert ac.is_zero()

    def test_permutation_invariance(self):
        order = list(range(13))
        random.Random(3).shuffle(order)
        metric = verify_clifford(self.gs).metric
        assert verify_clifford(self.gs.permuted(order)).metric == [metric[k] for k in order]

    @pytest.mark.parametrize("count", [10, 11, 12])
    def test_subsets_stay_clifford(self, count):
        sub = self.gs.subset(count)
        rep = verify_clifford(sub)
        assert rep.passed
        assert rep.metric == ([-1] * 6 + [1] * 7)[:count]

    def test_reversed_right_order_same_for_single_right_factors(self):
        # every generator has at most one right factor, but concatenations have two
        for a, b in combinations(range(6, 13), 2):
            wa, wb = self.gs.generators[a], self.gs.generators[b]
            assert (translate(wa + wb, right_order="reversed") + translate(wb + wa, right_order="reversed")).is_zero()


def test_singleton_set():
    gs = GammaSet("single", "O", [OperatorWord.of((LEFT, 1))])
    assert verify_clifford(gs).metric == [-1]


def test_non_clifford_set_reports_failure():
    gs = GammaSet("dup", "O", [OperatorWord.of((LEFT, 1)), OperatorWord.of((LEFT, 1))])
    rep = verify_clifford(gs)
    assert not rep.passed and rep.first_failure["a"] == 0 and rep.first_failure["b"] == 1
    with pytest.raises(ValueError):
        gs.verified()


def test_report_dict_shape():
    d = verify_clifford(quaternion_gamma_set()).to_dict()
    assert set(d) == {"set_name", "generator_count", "pairs_checked", "metric", "pass", "first_failure"}
