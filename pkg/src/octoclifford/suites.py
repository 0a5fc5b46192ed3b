"""Named verification suites; each returns a :class:`SuiteResult`."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

from .appendix import appendix_tables
from .clifford import (
    PRIORITY,
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
from .matrix import first_mismatch, identity, span_rank
from .reps import (
    complex_basis,
    left_matrix,
    octonion_commutator_defect,
    octonion_right_commutator_defect,
    quaternion_operators,
    right_matrix,
    verify_quaternion_product_rules,
)

SUITE_NAMES = (
    "complex-basis",
    "quaternion-rules",
    "quaternion-clifford",
    "sixth-gamma",
    "octonion-anticomm",
    "octonion-defect",
    "so7so8",
    "cliff76",
    "appendix",
)


@dataclass
class SuiteResult:
    suite: str
    checks_run: int = 0
    failures: list = field(default_factory=list)
    metrics: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def check(self, ok: bool, message: str) -> bool:
        self.checks_run += 1
        if not ok:
            self.failures.append(message)
        return ok

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks_run": self.checks_run,
            "failures": len(self.failures),
            "failure_messages": self.failures,
            "metrics": self.metrics,
            "details": self.details,
            "pass": self.passed,
        }


def complex_basis_suite(semantics: str = PRIORITY) -> SuiteResult:
    res = SuiteResult("complex-basis")
    r = span_rank(complex_basis())
    res.metrics["rank"] = r
    res.check(r == 4, f"span rank of {{1, 1*, E1, E1*}} is {r}, expected 4")
    return res


def quaternion_rules_suite(semantics: str = PRIORITY) -> SuiteResult:
    res = SuiteResult("quaternion-rules")
    report = verify_quaternion_product_rules()
    for c in report.checks:
        ok = c.full_holds and (c.printed_holds or c.rule.startswith("il"))
        res.check(ok, f"{c.rule} fails at {c.indices}")
    res.details["rules"] = report.summary()
    r = span_rank(quaternion_operators())
    res.metrics["rank16"] = r
    res.check(r == 16, f"H|H operators span {r}, expected 16")
    return res


def quaternion_clifford_suite(semantics: str = PRIORITY) -> SuiteResult:
    res = SuiteResult("quaternion-clifford")
    rep = verify_clifford(quaternion_gamma_set(), semantics)
    res.details["clifford"] = rep.to_dict()
    res.metrics["metric"] = rep.metric
    res.check(rep.passed and rep.metric == [-1, -1, 1, 1, 1],
              f"quaternion gamma set: metric {rep.metric}, first failure {rep.first_failure}")
    if rep.passed:
        basis = spin23_basis()
        res.metrics["spin23_dimension"] = basis.dimension
        res.check(basis.dimension == 10, f"spin(2,3) dimension {basis.dimension}")
        res.check(is_closed(basis), "spin(2,3) not closed under commutation")
        res.check(contains_span(basis, spin23_listed_basis()), "listed spin(2,3) basis outside commutator span")
    return res


def sixth_gamma_suite(semantics: str = PRIORITY) -> SuiteResult:
    res = SuiteResult("sixth-gamma")
    rep = sixth_gamma_search()
    res.details["search"] = rep.to_dict()
    res.metrics["anticommutant_dimension"] = rep.subspace_dim
    res.check(rep.impossible, f"basis operators extend the set: {rep.witnesses}")
    res.check(rep.subspace_dim == 0, f"anticommutant dimension {rep.subspace_dim}, reference 0")
    return res


def octonion_anticomm_suite(semantics: str = PRIORITY) -> SuiteResult:
    res = SuiteResult("octonion-anticomm")
    one = identity(8)
    for i, j in product(range(1, 8), repeat=2):
        expected = -2 * one if i == j else 0 * one
        res.check(left_matrix("O", i).anticommutator(left_matrix("O", j)) == expected, f"{{E{i},E{j}}}")
        res.check(right_matrix("O", i).anticommutator(right_matrix("O", j)) == expected, f"{{1|E{i},1|E{j}}}")
    for side in ("L", "R"):
        rep = verify_clifford(cliff70_set(side), semantics)
        res.metrics[f"cliff70_{side}"] = rep.metric
        res.check(rep.passed and rep.metric == [-1] * 7, f"Cliff(7,0)_{side}: {rep.first_failure}")
    return res


def octonion_defect_suite(semantics: str = PRIORITY) -> SuiteResult:
    res = SuiteResult("octonion-defect")
    for i, j in product(range(1, 8), repeat=2):
        res.check(octonion_commutator_defect(i, j).is_zero(), f"left defect ({i},{j})")
        res.check(octonion_right_commutator_defect(i, j).is_zero(), f"right defect ({i},{j})")
    weak = all(left_matrix("O", i) @ right_matrix("O", i) == right_matrix("O", i) @ left_matrix("O", i)
               for i in range(1, 8))
    res.check(weak, "E_i (1|E_i) != (1|E_i) E_i for some i")
    noncommuting = [(i, j) for i, j in product(range(1, 8), repeat=2)
                    if not left_matrix("O", i).commutator(right_matrix("O", j)).is_zero()]
    res.metrics["noncommuting_pairs"] = len(noncommuting)
    res.check(bool(noncommuting) and all(i != j for i, j in noncommuting),
              "expected some i != j with [E_i, 1|E_j] != 0 and none with i == j")
    return res


def so7so8_suite(semantics: str = PRIORITY) -> SuiteResult:
    res = SuiteResult("so7so8")
    for side in ("L", "R"):
        for name, build, dim in (("so7", so7_basis, 21), ("so8", so8_basis, 28)):
            try:
                basis = build(side)
            except ValueError as exc:
                res.check(False, str(exc))
                continue
            res.metrics[f"{name}_{side}"] = basis.dimension
            res.check(basis.dimension == dim, f"{basis.label} dimension {basis.dimension}")
            res.check(is_closed(basis), f"{basis.label} not closed")
    return res


def cliff76_suite(semantics: str = PRIORITY) -> SuiteResult:
    res = SuiteResult("cliff76")
    rep = verify_clifford(cliff76_set(), semantics)
    res.details["clifford"] = rep.to_dict()
    res.metrics["metric"] = rep.metric
    res.check(rep.passed and rep.metric == [-1] * 6 + [1] * 7,
              f"Cliff(7,6) under {semantics} semantics: first failure at "
              f"{(rep.first_failure or {}).get('a')},{(rep.first_failure or {}).get('b')}")
    return res


def appendix_suite(semantics: str = PRIORITY) -> SuiteResult:
    res = SuiteResult("appendix")
    for name, m in appendix_tables().items():
        idx = int(name[-1])
        ref = right_matrix("O", idx) if name.startswith("1|") else left_matrix("O", idx)
        bad = first_mismatch(m, ref)
        msg = "" if bad is None else f"{name}: entry ({bad[0]},{bad[1]}) table {bad[2]} vs computed {bad[3]}"
        res.check(bad is None, msg)
    return res


SUITES = {
    "complex-basis": complex_basis_suite,
    "quaternion-rules": quaternion_rules_suite,
    "quaternion-clifford": quaternion_clifford_suite,
    "sixth-gamma": sixth_gamma_suite,
    "octonion-anticomm": octonion_anticomm_suite,
    "octonion-defect": octonion_defect_suite,
    "so7so8": so7so8_suite,
    "cliff76": cliff76_suite,
    "appendix": appendix_suite,
}


def run_suite(name: str, semantics: str = PRIORITY) -> dict:
    """Run one suite (or ``all``) and return the run report as a plain dict."""
    start = time.perf_counter()
    names = SUITE_NAMES if name == "all" else (name,)
    if any(n not in SUITES for n in names):
        raise KeyError(name)
    results = [SUITES[n](semantics) for n in names]
    report = {
        "suite": name,
        "semantics": semantics,
        "checks_run": sum(r.checks_run for r in results),
        "failures": sum(len(r.failures) for r in results),
        "metrics": {r.suite: r.metrics for r in results},
        "results": [r.to_dict() for r in results],
    }
    report["pass"] = report["failures"] == 0
    report["wall_time"] = round(time.perf_counter() - start, 6)
    return report
