"""Words of left/right octonionic multiplications.

A word is read left to right in operator notation: ``L2.L1.R4`` stands for
``e_2 . e_1(e_4 . g``.  Right multiplications take priority: they act on the
operand before any left multiplication, whatever their position in the word.
Hence the matrix of a word is

    (E_a1 @ E_a2 @ ...)  @  (1|E_b1 @ 1|E_b2 @ ...)

with left and right factors each kept in reading order.  This is the only
place the evaluation rule lives; concatenation never reorders anything.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .algebra import DIMENSIONS, element_type, mul
from .matrix import IntMatrix, MatrixLabel, SpanBuilder, identity, span_rank
from .reps import embed, left_matrix, right_matrix, unembed

__all__ = [
    "LEFT",
    "RIGHT",
    "Factor",
    "OperatorWord",
    "parse_word",
    "r_op",
    "l_op",
    "translate",
    "apply",
    "apply_nested",
    "anticommutator",
    "naive_anticommutator",
    "degrees_of_freedom",
]

LEFT = "L"
RIGHT = "R"

# Ordering of several right factors inside one word.
READING = "reading"
REVERSED = "reversed"


@dataclass(frozen=True)
class Factor:
    side: str
    index: int

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"factor side must be 'L' or 'R', got {self.side!r}")
        if not isinstance(self.index, int) or not 1 <= self.index <= 7:
            raise ValueError(f"factor index must be in 1..7, got {self.index!r}")

    def __str__(self):
        return f"{self.side}{self.index}"


@dataclass(frozen=True)
class OperatorWord:
    """Factors in reading order, plus right factors closed off by a bracket.

    ``outer`` holds right multiplications written after a closing bracket,
    ``e_i)e_j``: they act after every other factor.  Plain words leave it
    empty.
    """

    factors: tuple = ()
    outer: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        outer = tuple(self.outer)
        for j in outer:
            Factor(RIGHT, j)
        object.__setattr__(self, "outer", outer)

    @classmethod
    def of(cls, *factors: tuple[str, int] | Factor) -> "OperatorWord":
        return cls(tuple(f if isinstance(f, Factor) else Factor(*f) for f in factors))

    def __add__(self, other: "OperatorWord") -> "OperatorWord":
        return OperatorWord(self.factors + other.factors, self.outer + other.outer)

    def __len__(self):
        return len(self.factors) + len(self.outer)

    def __iter__(self):
        return iter(self.factors)

    def lefts(self) -> list[int]:
        return [f.index for f in self.factors if f.side == LEFT]

    def rights(self) -> list[int]:
        return [f.index for f in self.factors if f.side == RIGHT]

    def __str__(self):
        body = ".".join(str(f) for f in self.factors)
        if self.outer:
            body += ")" + ".".join(f"R{j}" for j in self.outer)
        return body or "1"

    def paper_notation(self) -> str:
        """``e_1(e_4`` style rendering; a left factor followed by a right one is barred."""
        parts = []
        fs = list(self.factors)
        k = 0
        while k < len(fs):
            f = fs[k]
            if f.side == LEFT and k + 1 < len(fs) and fs[k + 1].side == RIGHT:
                parts.append(f"e{f.index}(e{fs[k + 1].index}")
                k += 2
                continue
            parts.append(f"e{f.index}" if f.side == LEFT else f"1|e{f.index}")
            k += 1
        out = ".".join(parts) or "1"
        for j in self.outer:
            out += f")e{j}"
        return out


_FACTOR_RE = re.compile(r"^([LR])(\d+)$")


def _parse_factors(text: str) -> list[Factor]:
    factors = []
    for tok in text.split("."):
        m = _FACTOR_RE.match(tok.strip().upper())
        if not m:
            raise ValueError(f"cannot parse factor {tok!r}; expected L<i> or R<i>")
        factors.append(Factor(m.group(1), int(m.group(2))))
    return factors


def parse_word(text: str) -> OperatorWord:
    """Parse ``L2.L1.R4`` (or ``L1)R4`` for a left-first bracket); ``1`` is the identity word."""
    text = text.strip()
    if text in ("", "1"):
        return OperatorWord()
    body, sep, tail = text.partition(")")
    factors = _parse_factors(body)
    outer = ()
    if sep:
        outer_factors = _parse_factors(tail)
        if any(f.side != RIGHT for f in outer_factors):
            raise ValueError(f"only right factors may follow ')' in {text!r}")
        outer = tuple(f.index for f in outer_factors)
    return OperatorWord(tuple(factors), outer)


def r_op(i: int, j: int) -> OperatorWord:
    """``e_i(e_j``: ``g -> e_i (g e_j)``."""
    return OperatorWord.of((LEFT, i), (RIGHT, j))


def l_op(i: int, j: int) -> OperatorWord:
    """``e_i)e_j``: ``g -> (e_i g) e_j``."""
    return OperatorWord((Factor(LEFT, i),), (j,))


def _check_algebra(w: OperatorWord, algebra: str) -> None:
    top = DIMENSIONS[algebra] - 1
    for idx in [f.index for f in w.factors] + list(w.outer):
        if idx > top:
            raise ValueError(f"factor index {idx} out of range for algebra {algebra}")


def _sectors(w: OperatorWord, right_order: str) -> tuple[list[int], list[int], list[int]]:
    rights = w.rights()
    if right_order == REVERSED:
        rights = rights[::-1]
    elif right_order != READING:
        raise ValueError(f"unknown right_order {right_order!r}")
    return list(reversed(w.outer)), w.lefts(), rights


def translate(w: OperatorWord, algebra: str = "O", right_order: str = READING) -> IntMatrix:
    """Matrix of ``w`` under right-action priority: ``(outer) @ (lefts) @ (rights)``."""
    _check_algebra(w, algebra)
    outer, lefts, rights = _sectors(w, right_order)
    m = identity(DIMENSIONS[algebra])
    for j in outer:
        m = m @ right_matrix(algebra, j)
    for i in lefts:
        m = m @ left_matrix(algebra, i)
    for j in rights:
        m = m @ right_matrix(algebra, j)
    index = tuple(f.index for f in w.factors) + w.outer
    return m.relabel(MatrixLabel(algebra, "word", index, str(w)))


def apply(w: OperatorWord, g, right_order: str = READING):
    algebra = g.algebra
    return unembed(translate(w, algebra, right_order) @ embed(g), algebra)


def apply_nested(w: OperatorWord, g, right_order: str = READING):
    """Evaluate ``w`` on ``g`` by nested products of units, no matrices involved."""
    algebra = g.algebra
    _check_algebra(w, algebra)
    cls = element_type(algebra)
    outer, lefts, rights = _sectors(w, right_order)
    x = g
    # innermost first: the factor written last in the matrix product acts first
    for j in reversed(rights):
        x = mul(x, cls.unit(j))
    for i in reversed(lefts):
        x = mul(cls.unit(i), x)
    for j in reversed(outer):
        x = mul(x, cls.unit(j))
    return x


def anticommutator(wa: OperatorWord, wb: OperatorWord, algebra: str = "O", right_order: str = READING) -> IntMatrix:
    """``{wa, wb}`` with the priority rule applied to the concatenated words."""
    return translate(wa + wb, algebra, right_order) + translate(wb + wa, algebra, right_order)


def naive_anticommutator(wa: OperatorWord, wb: OperatorWord, algebra: str = "O",
                         right_order: str = READING) -> IntMatrix:
    """``{wa, wb}`` by composing the two matrices, the evaluation the priority rule replaces."""
    a = translate(wa, algebra, right_order)
    b = translate(wb, algebra, right_order)
    return a.anticommutator(b)


def _algebra_closure(gens: Iterable[IntMatrix], n: int) -> list[IntMatrix]:
    """A spanning list for the associative algebra generated by ``gens`` (with unit)."""
    gens = list(gens)
    builder = SpanBuilder()
    builder.add(identity(n).flat())
    span = [identity(n)]
    frontier = [identity(n)]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                cand = a @ g
                if builder.add(cand.flat()):
                    span.append(cand)
                    new.append(cand)
        frontier = new
    return span


def degrees_of_freedom() -> dict:
    """Rank audit of the octonionic two-sided operators.

    ``two_sided_rank`` is the span of ``E_i``, ``1|E_j`` and ``E_i @ 1|E_j``;
    the sector ranks are the dimensions of the matrix algebras generated by
    the left and by the right multiplications alone.
    """
    ops = [left_matrix("O", i) for i in range(1, 8)]
    ops += [right_matrix("O", j) for j in range(1, 8)]
    ops += [translate(r_op(i, j)) for i in range(1, 8) for j in range(1, 8)]
    left_sector = span_rank(_algebra_closure([left_matrix("O", i) for i in range(1, 8)], 8))
    right_sector = span_rank(_algebra_closure([right_matrix("O", i) for i in range(1, 8)], 8))
    return {
        "two_sided_rank": span_rank(ops),
        "two_sided_rank_with_identity": span_rank([identity(8)] + ops),
        "left_sector_rank": left_sector,
        "right_sector_rank": right_sector,
        "parameter_count": left_sector + right_sector,
    }
