"""Clifford generator sets, their verification, and the Lie algebras built from them."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import DIMENSIONS
from .matrix import IntMatrix, identity, null_space, span_rank
from .reps import left_matrix, mixed_matrix, quaternion_operators, right_matrix
from .words import LEFT, RIGHT, READING, OperatorWord, anticommutator, naive_anticommutator, r_op, translate

__all__ = [
    "PRIORITY",
    "NAIVE",
    "GammaSet",
    "CliffordReport",
    "LieBasis",
    "verify_clifford",
    "quaternion_gamma_set",
    "cliff70_set",
    "cliff76_set",
    "spin23_basis",
    "spin23_listed_basis",
    "so7_basis",
    "so8_basis",
    "is_closed",
    "contains_span",
    "SixthGammaReport",
    "sixth_gamma_search",
]

PRIORITY = "priority"
NAIVE = "naive"


@dataclass(frozen=True)
class GammaSet:
    name: str
    algebra: str
    generators: tuple
    metric: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    def __len__(self):
        return len(self.generators)

    def subset(self, count: int) -> "GammaSet":
        """The first ``count`` generators (trailing ones dropped), unverified."""
        if not 0 < count <= len(self.generators):
            raise ValueError(f"subset size must be in 1..{len(self.generators)}")
        return GammaSet(f"{self.name}[:{count}]", self.algebra, self.generators[:count])

    def permuted(self, order) -> "GammaSet":
        order = list(order)
        if sorted(order) != list(range(len(self.generators))):
            raise ValueError("order must be a permutation of generator positions")
        metric = tuple(self.metric[k] for k in order) if self.metric is not None else None
        return GammaSet(self.name, self.algebra, tuple(self.generators[k] for k in order), metric)

    def verified(self, semantics: str = PRIORITY) -> "GammaSet":
        report = verify_clifford(self, semantics)
        if not report.passed:
            f = report.first_failure
            raise ValueError(f"{self.name} is not a Clifford set: pair ({f['a']}, {f['b']}) fails")
        return dataclasses.replace(self, metric=tuple(report.metric))

    def matrices(self) -> list[IntMatrix]:
        return [translate(w, self.algebra) for w in self.generators]


@dataclass
class CliffordReport:
    set_name: str
    generator_count: int
    pairs_checked: int
    metric: list | None
    passed: bool
    first_failure: dict | None
    semantics: str = PRIORITY

    def to_dict(self) -> dict:
        return {
            "set_name": self.set_name,
            "generator_count": self.generator_count,
            "pairs_checked": self.pairs_checked,
            "metric": self.metric,
            "pass": self.passed,
            "first_failure": self.first_failure,
        }


def _pair_anticommutator(gs: GammaSet, a: int, b: int, semantics: str) -> IntMatrix:
    wa, wb = gs.generators[a], gs.generators[b]
    if semantics == PRIORITY:
        return anticommutator(wa, wb, gs.algebra, READING)
    if semantics == NAIVE:
        return naive_anticommutator(wa, wb, gs.algebra, READING)
    raise ValueError(f"unknown semantics {semantics!r}")


def verify_clifford(gs: GammaSet, semantics: str = PRIORITY) -> CliffordReport:
    """Check ``{g_a, g_b} = 2 eta_aa delta_ab`` for every pair ``a <= b``.

    Pairs are visited in lexicographic order and checking stops at the
    first failure, so the reported pair is the smallest failing one.
    """
    n = len(gs.generators)
    dim = DIMENSIONS[gs.algebra]
    metric = [0] * n
    checked = 0
    for a in range(n):
        for b in range(a, n):
            ac = _pair_anticommutator(gs, a, b, semantics)
            checked += 1
            if a == b:
                c = ac.scalar_multiple_of_identity()
                if c in (2, -2):
                    metric[a] = c // 2
                    continue
                expected = None
            elif ac.is_zero():
                continue
            else:
                expected = 0
            diff = ac if expected is not None else ac - (2 if ac[0, 0] >= 0 else -2) * identity(dim)
            return CliffordReport(
                gs.name, n, checked, None, False,
                {"a": a, "b": b, "matrix_diff": diff.tolist()}, semantics,
            )
    return CliffordReport(gs.name, n, checked, metric, True, None, semantics)


# -- generator sets ----------------------------------------------------------

def quaternion_gamma_set() -> GammaSet:
    gens = (
        OperatorWord.of((LEFT, 3)),
        OperatorWord.of((LEFT, 2)),
        OperatorWord.of((LEFT, 1), (RIGHT, 1)),
        OperatorWord.of((LEFT, 1), (RIGHT, 2)),
        OperatorWord.of((LEFT, 1), (RIGHT, 3)),
    )
    return GammaSet("Cliff(2,3)", "H", gens)


def cliff70_set(side: str = LEFT) -> GammaSet:
    side = {"left": LEFT, "right": RIGHT}.get(str(side).lower(), side)
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be L or R, got {side!r}")
    gens = tuple(OperatorWord.of((side, i)) for i in range(1, 8))
    return GammaSet(f"Cliff(7,0)_{side}", "O", gens)


def cliff76_set() -> GammaSet:
    """Thirteen generators: e_2..e_7 followed by the barred e_1(e_j, j = 1..7."""
    gens = tuple(OperatorWord.of((LEFT, i)) for i in range(2, 8))
    gens += tuple(r_op(1, j) for j in range(1, 8))
    return GammaSet("Cliff(7,6)", "O", gens)


# -- Lie bases ----------------------------------------------------------------

@dataclass(frozen=True)
class LieBasis:
    label: str
    matrices: tuple
    dimension: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "matrices", tuple(self.matrices))
        object.__setattr__(self, "dimension", span_rank(list(self.matrices)))


def is_closed(basis: LieBasis) -> bool:
    """Adjoining every pairwise commutator leaves the span rank unchanged."""
    ms = list(basis.matrices)
    comms = [a.commutator(b) for a, b in combinations(ms, 2)]
    return span_rank(ms + comms) == basis.dimension


def contains_span(basis: LieBasis, others) -> bool:
    others = list(others)
    return span_rank(list(basis.matrices) + others) == basis.dimension


def spin23_basis() -> LieBasis:
    gs = quaternion_gamma_set().verified()
    ms = gs.matrices()
    comms = [
        ms[a].commutator(ms[b]).relabel(f"[g{a + 1},g{b + 1}]")
        for a, b in combinations(range(len(ms)), 2)
    ]
    basis = LieBasis("spin(2,3)", comms)
    if basis.dimension != 10:
        raise ValueError(f"spin(2,3) commutators span {basis.dimension} dimensions, expected 10")
    return basis


def spin23_listed_basis() -> list[IntMatrix]:
    """``e1, 1|e1, 1|e2, 1|e3, e2|e1, e3|e1, e2|e2, e3|e2, e2|e3, e3|e3`` as matrices."""
    out = [left_matrix("H", 1)] + [right_matrix("H", j) for j in (1, 2, 3)]
    out += [mixed_matrix(i, j) for j in (1, 2, 3) for i in (2, 3)]
    return out


def _side_matrices(side: str) -> list[IntMatrix]:
    side = {"left": LEFT, "right": RIGHT}.get(str(side).lower(), side)
    if side == LEFT:
        return [left_matrix("O", i) for i in range(1, 8)]
    if side == RIGHT:
        return [right_matrix("O", i) for i in range(1, 8)]
    raise ValueError(f"side must be L or R, got {side!r}")


def so7_basis(side: str = LEFT) -> LieBasis:
    ms = _side_matrices(side)
    comms = [ms[i].commutator(ms[j]) for i, j in combinations(range(7), 2)]
    basis = LieBasis(f"so(7)_{side[0].upper()}", comms)
    if basis.dimension != 21:
        raise ValueError(f"so(7) span has dimension {basis.dimension}, expected 21")
    return basis


def so8_basis(side: str = LEFT) -> LieBasis:
    ms = _side_matrices(side)
    basis = LieBasis(f"so(8)_{side[0].upper()}", list(so7_basis(side).matrices) + ms)
    if basis.dimension != 28:
        raise ValueError(f"so(8) span has dimension {basis.dimension}, expected 28")
    return basis


# -- sixth gamma ----------------------------------------------------------------

_QUATERNION_LABELS = (
    ["1", "e1", "e2", "e3"]
    + [lab for j in (1, 2, 3) for lab in [f"1|e{j}"] + [f"e{i}|e{j}" for i in (1, 2, 3)]]
)


@dataclass
class SixthGammaReport:
    subspace_dim: int
    witnesses: list  # signed basis operators extending the set
    anticommuting_basis: list  # basis operators anticommuting with all five, any square
    candidates_tested: int

    @property
    def impossible(self) -> bool:
        return not self.witnesses

    def to_dict(self) -> dict:
        return dataclasses.asdict(self) | {"impossible": self.impossible}


def sixth_gamma_search() -> SixthGammaReport:
    """Look for a sixth generator extending the quaternionic Clifford set.

    Every element of the sixteen-operator basis is tried with both signs;
    separately the full anticommutant ``{X in span : {X, g_a} = 0 for all a}``
    is found as the null space of the stacked linear conditions.
    """
    gammas = quaternion_gamma_set().verified().matrices()
    ops = quaternion_operators()

    witnesses, anticommuting = [], []
    tested = 0
    for label, op in zip(_QUATERNION_LABELS, ops):
        for sign in (1, -1):
            x = sign * op
            tested += 1
            if not all(x.anticommutator(g).is_zero() for g in gammas):
                continue
            if sign == 1:
                anticommuting.append(label)
            if x.anticommutator(x).scalar_multiple_of_identity() in (2, -2):
                witnesses.append(("" if sign == 1 else "-") + label)

    # column c of the system is the flattened {op_c, g} stacked over all g
    blocks = [[op.anticommutator(g).flat() for op in ops] for g in gammas]
    rows = [[col[r] for col in block] for block in blocks for r in range(16)]
    dim = len(null_space(rows))
    return SixthGammaReport(dim, witnesses, anticommuting, tested)
