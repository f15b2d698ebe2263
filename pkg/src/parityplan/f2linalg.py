"""Dense linear algebra over GF(2) with bit-packed rows.

A vector of length L is an int bitset: coordinate j is bit j. The string
form is written lowest coordinate first, so "0110" sets coordinates 1 and
2. Matrices store one int per row. Everything is immutable; row reduction
returns a new matrix with zero rows sunk to the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


@dataclass(frozen=True)
class BitVector:
    """Immutable vector over GF(2); bit j of bits is coordinate j."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"length must be nonnegative, got {self.length}")
        if not 0 <= self.bits < 1 << self.length:
            raise ValueError(f"bits {self.bits:#x} out of range for length {self.length}")

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse a 0/1 string, lowest coordinate first."""
        if not all(c in "01" for c in s):
            raise ValueError(f"not a 0/1 string: {s!r}")
        bits = 0
        for j, c in enumerate(s):
            if c == "1":
                bits |= 1 << j
        return cls(len(s), bits)

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> "BitVector":
        vals = tuple(coords)
        bits = 0
        for j, v in enumerate(vals):
            if v not in (0, 1):
                raise ValueError(f"coordinate {j} is {v!r}, expected 0 or 1")
            bits |= v << j
        return cls(len(vals), bits)

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.length))

    def bit(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(f"coordinate {j} out of range for length {self.length}")
        return (self.bits >> j) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """Indices of the nonzero coordinates, ascending, 0-based."""
        return tuple(j for j in range(self.length) if (self.bits >> j) & 1)

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)


def weight(v: BitVector) -> int:
    """Hamming weight of v."""
    return v.weight()


@dataclass(frozen=True)
class BitMatrix:
    """Immutable matrix over GF(2); rows[i] is the bitset of row i."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ValueError(f"cols must be nonnegative, got {self.cols}")
        for i, r in enumerate(self.rows):
            if not 0 <= r < 1 << self.cols:
                raise ValueError(f"row {i} has bits outside {self.cols} columns")

    @classmethod
    def from_row_vectors(cls, vectors: Sequence[BitVector], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            if not vectors:
                raise ValueError("cols is required for an empty matrix")
            cols = vectors[0].length
        for v in vectors:
            if v.length != cols:
                raise ValueError(f"row length {v.length} does not match cols {cols}")
        return cls(tuple(v.bits for v in vectors), cols)

    @classmethod
    def from_strings(cls, strings: Sequence[str]) -> "BitMatrix":
        return cls.from_row_vectors([BitVector.from_string(s) for s in strings])

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.rows[i])

    def column_bits(self, j: int) -> int:
        """Column j as an int bitset over row indices."""
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range")
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r >> j) & 1) << i
        return out

    def row_strings(self) -> list[str]:
        return [self.row(i).to_string() for i in range(self.num_rows)]


def identity(n: int) -> BitMatrix:
    return BitMatrix(tuple(1 << i for i in range(n)), n)


def matvec(mat: BitMatrix, vec: BitVector) -> BitVector:
    """Matrix-vector product over GF(2)."""
    if vec.length != mat.cols:
        raise ValueError(f"dimension mismatch: matrix has {mat.cols} cols, vector length {vec.length}")
    out = 0
    for i, r in enumerate(mat.rows):
        if (r & vec.bits).bit_count() & 1:
            out |= 1 << i
    return BitVector(mat.num_rows, out)


class RowReduction(NamedTuple):
    reduced: BitMatrix
    rank: int
    pivot_cols: tuple[int, ...]


def row_reduce(mat: BitMatrix) -> RowReduction:
    """Reduced row echelon form.

    Deterministic: pivots are chosen as the first remaining row with a 1
    in the current column, scanning columns left to right. Zero rows end
    up below the rank rows, so reduced.rows[:rank] is the RREF proper.
    """
    rows = list(mat.rows)
    pivots: list[int] = []
    rank = 0
    for col in range(mat.cols):
        sel = None
        for i in range(rank, len(rows)):
            if (rows[i] >> col) & 1:
                sel = i
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        for i in range(len(rows)):
            if i != rank and (rows[i] >> col) & 1:
                rows[i] ^= rows[rank]
        pivots.append(col)
        rank += 1
    return RowReduction(BitMatrix(tuple(rows), mat.cols), rank, tuple(pivots))


def kernel_basis(mat: BitMatrix) -> list[BitVector]:
    """Basis of the right kernel, one vector per free column, ascending."""
    red, rank, pivots = row_reduce(mat)
    pivot_set = set(pivots)
    basis: list[BitVector] = []
    for free in range(mat.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for r in range(rank):
            if (red.rows[r] >> free) & 1:
                bits |= 1 << pivots[r]
        basis.append(BitVector(mat.cols, bits))
    return basis


def complement_basis(vectors: Sequence[BitVector], dim: int) -> list[BitVector]:
    """Standard basis vectors extending span(vectors) to all of GF(2)^dim.

    Returns the unit vectors at the non-pivot coordinates of the row
    reduction, so the result is canonical for a given input span.
    """
    for v in vectors:
        if v.length != dim:
            raise ValueError(f"vector length {v.length} does not match dim {dim}")
    if not vectors:
        return [BitVector(dim, 1 << j) for j in range(dim)]
    mat = BitMatrix(tuple(v.bits for v in vectors), dim)
    _, _, pivots = row_reduce(mat)
    pivot_set = set(pivots)
    return [BitVector(dim, 1 << j) for j in range(dim) if j not in pivot_set]
