"""Small dense exact matrices and the rank/null-space kernels used for verification.

Entries are Python ints (or Fractions where a computation needs them), so every
comparison is exact.  Rank uses Bareiss fraction-free elimination.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "MatrixLabel",
    "identity",
    "zeros",
    "bareiss_rank",
    "span_rank",
    "SpanBuilder",
    "null_space",
    "first_mismatch",
    "to_json",
    "from_json",
    "to_csv",
    "from_csv",
    "to_plain",
]


@dataclass(frozen=True)
class MatrixLabel:
    """Operator provenance: which algebra/side/indices a matrix represents."""

    algebra: str = ""
    side: str = ""  # "left", "right", "mixed", "conj", "product", ...
    index: tuple = ()
    name: str = ""

    def __str__(self):
        if self.name:
            return self.name
        idx = ",".join(str(i) for i in self.index)
        return f"{self.side}[{idx}]({self.algebra})" if self.side else "?"

    def header(self, dimension: int) -> dict:
        index = self.index[0] if len(self.index) == 1 else list(self.index)
        h = {"algebra": self.algebra, "side": self.side, "index": index, "dimension": dimension}
        if self.name:
            h["name"] = self.name
        return h


@dataclass(frozen=True, eq=False)
class IntMatrix:
    rows: tuple
    label: MatrixLabel = field(default=MatrixLabel(), compare=False)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], label: MatrixLabel = MatrixLabel()) -> "IntMatrix":
        n = len(columns)
        return cls(tuple(tuple(columns[j][i] for j in range(n)) for i in range(n)), label)

    @property
    def n(self) -> int:
        return len(self.rows)

    def relabel(self, label: MatrixLabel | str) -> "IntMatrix":
        if isinstance(label, str):
            label = MatrixLabel(name=label)
        return IntMatrix(self.rows, label)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, k) -> "IntMatrix":
        if isinstance(k, IntMatrix):
            return self @ k
        return IntMatrix(tuple(tuple(k * a for a in r) for r in self.rows))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            self._same_shape(other)
            cols = list(zip(*other.rows))
            return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))
        vec = tuple(other)
        if len(vec) != self.n:
            raise ValueError(f"vector of length {len(vec)} does not match {self.n}x{self.n} matrix")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.rows)

    def _same_shape(self, other: "IntMatrix") -> None:
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def commutator(self, other: "IntMatrix") -> "IntMatrix":
        return self @ other - other @ self

    def anticommutator(self, other: "IntMatrix") -> "IntMatrix":
        return self @ other + other @ self

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def scalar_multiple_of_identity(self):
        """Return ``c`` if the matrix equals ``c * 1``, else ``None``."""
        c = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a != (c if i == j else 0):
                    return None
        return c

    def flat(self) -> tuple:
        return tuple(a for r in self.rows for a in r)

    def tolist(self) -> list:
        return [list(r) for r in self.rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r}, label={str(self.label)!r})"

    def __str__(self):
        return to_plain(self)


def identity(n: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), MatrixLabel(name="1"))


def zeros(n: int) -> IntMatrix:
    return IntMatrix(tuple((0,) * n for _ in range(n)))


def product(ms: Iterable[IntMatrix], n: int) -> IntMatrix:
    out = identity(n)
    for m in ms:
        out = out @ m
    return out


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer (or rational) row list by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    if any(isinstance(a, Fraction) for r in m for a in r):
        # clear denominators row by row; rank is unchanged
        cleared = []
        for r in m:
            den = 1
            for a in r:
                if isinstance(a, Fraction):
                    den = math.lcm(den, a.denominator)
            cleared.append([int(a * den) for a in r])
        m = cleared
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            f = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col, n_cols):
                # exact division is guaranteed by Sylvester's identity
                row_r[c] = (p * row_r[c] - f * row_p[c]) // prev
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def span_rank(ms: Sequence[IntMatrix]) -> int:
    """Dimension of the linear span of ``ms`` viewed as flat vectors."""
    if not ms:
        return 0
    n = ms[0].n
    if any(m.n != n for m in ms):
        raise ValueError("span_rank needs matrices of a single dimension")
    return bareiss_rank([m.flat() for m in ms])


class SpanBuilder:
    """Incremental span over Q: ``add`` reports whether a vector enlarged it."""

    def __init__(self):
        self._rows: dict[int, list[int]] = {}  # pivot column -> primitive integer row

    def __len__(self):
        return len(self._rows)

    def add(self, vec: Sequence[int]) -> bool:
        v = list(vec)
        for pc in sorted(self._rows):
            if v[pc]:
                row = self._rows[pc]
                a, b = row[pc], v[pc]
                v = [a * x - b * y for x, y in zip(v, row)]
        pivot = next((c for c, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        g = math.gcd(*v)
        self._rows[pivot] = [x // g for x in v]
        return True


def null_space(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}`` via exact reduced row echelon form over Q."""
    if not rows:
        return []
    m = [[Fraction(a) for a in r] for r in rows]
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [a / p for a in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][fc]
        basis.append(v)
    return basis


def first_mismatch(a: IntMatrix, b: IntMatrix):
    """``(i, j, a_ij, b_ij)`` for the first differing entry in row-major order, or ``None``."""
    for i, (r, s) in enumerate(zip(a.rows, b.rows)):
        for j, (x, y) in enumerate(zip(r, s)):
            if x != y:
                return i, j, x, y
    return None


# -- serialization -----------------------------------------------------------

def _jsonable(a):
    if isinstance(a, Fraction):
        return a.numerator if a.denominator == 1 else str(a)
    return a


def to_dict(m: IntMatrix) -> dict:
    return {"header": m.label.header(m.n), "matrix": [[_jsonable(a) for a in r] for r in m.rows]}


def _from_dict(d: dict) -> IntMatrix:
    h = d.get("header", {})
    index = h.get("index", ())
    if isinstance(index, int):
        index = (index,)
    label = MatrixLabel(h.get("algebra", ""), h.get("side", ""), tuple(index), h.get("name", ""))
    m = IntMatrix(tuple(tuple(Fraction(a) if isinstance(a, str) else a for a in r) for r in d["matrix"]), label)
    if "dimension" in h and h["dimension"] != m.n:
        raise ValueError(f"header dimension {h['dimension']} does not match {m.n}x{m.n} payload")
    return m


def to_json(ms: IntMatrix | Sequence[IntMatrix], indent: int | None = None) -> str:
    """One matrix serializes to an object, several to an array of objects."""
    if isinstance(ms, IntMatrix):
        return json.dumps(to_dict(ms), indent=indent)
    return json.dumps([to_dict(m) for m in ms], indent=indent)


def from_json(text: str) -> IntMatrix | list[IntMatrix]:
    data = json.loads(text)
    if isinstance(data, list):
        return [_from_dict(d) for d in data]
    return _from_dict(data)


def to_csv(m: IntMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in m.rows:
        w.writerow([_jsonable(a) for a in r])
    return buf.getvalue()


def from_csv(text: str) -> IntMatrix:
    rows = [[int(a) for a in r] for r in csv.reader(io.StringIO(text)) if r]
    return IntMatrix(tuple(tuple(r) for r in rows))


def to_plain(m: IntMatrix) -> str:
    cells = [[str(_jsonable(a)) for a in r] for r in m.rows]
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)
