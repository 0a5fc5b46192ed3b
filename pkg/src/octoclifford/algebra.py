"""Exact arithmetic for the complex numbers, quaternions and octonions.

Elements are immutable tuples of :class:`fractions.Fraction` coefficients in
the unit order ``(1, e1, ..., e_{n-1})``.  Products of imaginary units follow

    e_i * e_j = -delta_ij + eps_ijk e_k

with ``eps`` taken from a precomputed :class:`StructureTable`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import ClassVar

__all__ = [
    "OCTONION_TRIPLES",
    "QUATERNION_TRIPLES",
    "StructureTable",
    "structure_table",
    "ComplexNum",
    "QuaternionNum",
    "OctonionNum",
    "element_type",
    "basis",
    "mul",
    "conj",
    "norm_sq",
    "commutator",
    "associator",
]

# Cyclic triples (i, j, k) with eps_ijk = +1.
QUATERNION_TRIPLES = ((1, 2, 3),)
OCTONION_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))

DIMENSIONS = {"C": 2, "H": 4, "O": 8}


@dataclass(frozen=True)
class StructureTable:
    """Dense map ``(i, j) -> (sign, k)`` for imaginary units, ``e_i e_j = sign * e_k``.

    For ``i == j`` the entry is ``(0, 0)``: the product is ``-1`` and carries
    no epsilon term.
    """

    algebra: str
    triples: tuple
    table: tuple  # table[i][j] == (sign, k); row/column 0 unused

    @property
    def dimension(self) -> int:
        return DIMENSIONS[self.algebra]

    def epsilon(self, i: int, j: int, k: int) -> int:
        sign, kk = self.table[i][j]
        return sign if kk == k else 0

    def product(self, i: int, j: int) -> tuple[int, int]:
        """Return ``(sign, index)`` with ``e_i e_j = sign * e_index`` for all ``0 <= i, j < dim``."""
        if i == 0:
            return 1, j
        if j == 0:
            return 1, i
        if i == j:
            return -1, 0
        return self.table[i][j]


@lru_cache(maxsize=None)
def structure_table(algebra: str) -> StructureTable:
    if algebra == "H":
        triples = QUATERNION_TRIPLES
    elif algebra == "O":
        triples = OCTONION_TRIPLES
    else:
        raise ValueError(f"no structure table for algebra {algebra!r} (expected 'H' or 'O')")
    n = DIMENSIONS[algebra]
    table = [[(0, 0)] * n for _ in range(n)]
    for a, b, c in triples:
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            table[i][j] = (1, k)
            table[j][i] = (-1, k)
    for i in range(1, n):
        for j in range(1, n):
            if i != j and table[i][j] == (0, 0):
                raise AssertionError(f"incomplete structure table at ({i}, {j})")
    return StructureTable(algebra, triples, tuple(tuple(row) for row in table))


def _scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational coefficient required, got {type(x).__name__}")


class _Element:
    """Shared implementation; concrete algebras fix ``algebra`` and ``dim``."""

    algebra: ClassVar[str]
    dim: ClassVar[int]
    __slots__ = ("coeffs",)

    def __init__(self, *coeffs):
        if len(coeffs) == 1 and not isinstance(coeffs[0], (int, Rational, str)):
            coeffs = tuple(coeffs[0])
        if len(coeffs) != self.dim:
            raise ValueError(f"{type(self).__name__} needs {self.dim} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", tuple(_scalar(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def unit(cls, i: int) -> "_Element":
        if not 0 <= i < cls.dim:
            raise IndexError(f"unit index {i} out of range for {cls.algebra}")
        c = [0] * cls.dim
        c[i] = 1
        return cls(c)

    @classmethod
    def zero(cls) -> "_Element":
        return cls([0] * cls.dim)

    @classmethod
    def one(cls) -> "_Element":
        return cls.unit(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.dim

    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __eq__(self, other):
        if isinstance(other, _Element):
            return type(other) is type(self) and other.coeffs == self.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra, self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            other = type(self).one() * other
        self._check(other)
        return type(self)([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            s = _scalar(other)
            return type(self)([s * a for a in self.coeffs])
        if isinstance(other, _Element):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self * other
        return NotImplemented

    def conj(self):
        return conj(self)

    def norm_sq(self) -> Fraction:
        return norm_sq(self)

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self.coeffs)})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            unit = "" if i == 0 else f"e{i}"
            if unit and c == 1:
                terms.append(unit)
            elif unit and c == -1:
                terms.append("-" + unit)
            else:
                terms.append(f"{c}{unit}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


class ComplexNum(_Element):
    __slots__ = ()
    algebra = "C"
    dim = 2


class QuaternionNum(_Element):
    __slots__ = ()
    algebra = "H"
    dim = 4


class OctonionNum(_Element):
    __slots__ = ()
    algebra = "O"
    dim = 8


_TYPES = {"C": ComplexNum, "H": QuaternionNum, "O": OctonionNum}


def element_type(algebra: str) -> type:
    try:
        return _TYPES[algebra]
    except KeyError:
        raise ValueError(f"unknown algebra {algebra!r} (expected one of C, H, O)") from None


def basis(algebra: str) -> list:
    cls = element_type(algebra)
    return [cls.unit(i) for i in range(cls.dim)]


@lru_cache(maxsize=None)
def _product_map(algebra: str) -> tuple:
    """Flat ``(i, j) -> (sign, k)`` over all units, including the real unit."""
    if algebra == "C":
        return ((1, 0), (1, 1)), ((1, 1), (-1, 0))
    st = structure_table(algebra)
    n = st.dimension
    return tuple(tuple(st.product(i, j) for j in range(n)) for i in range(n))


def mul(x: _Element, y: _Element) -> _Element:
    x._check(y)
    pm = _product_map(x.algebra)
    out = [Fraction(0)] * x.dim
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        row = pm[i]
        for j, b in enumerate(y.coeffs):
            if not b:
                continue
            sign, k = row[j]
            out[k] += sign * a * b
    return type(x)(out)


def conj(x: _Element) -> _Element:
    c = x.coeffs
    return type(x)((c[0],) + tuple(-a for a in c[1:]))


def norm_sq(x: _Element) -> Fraction:
    return sum((a * a for a in x.coeffs), Fraction(0))


def commutator(a: _Element, b: _Element) -> _Element:
    return mul(a, b) - mul(b, a)


def associator(a: _Element, b: _Element, c: _Element) -> _Element:
    """``(a b) c - a (b c)``; identically zero on the associative algebras."""
    return mul(mul(a, b), c) - mul(a, mul(b, c))

