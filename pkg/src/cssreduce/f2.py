"""Bit-packed exact linear algebra over GF(2).

Matrices store one Python int per row, bit j = column j.  Everything here
is pure and deterministic: elimination always pivots on the first nonzero
column with the lowest remaining row index, so reduced forms (and anything
derived from them, such as kernel bases) are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def bits_of(word: int) -> Iterator[int]:
    """Yield the set bit positions of `word`, lowest first."""
    while word:
        low = word & -word
        yield low.bit_length() - 1
        word ^= low


@dataclass(frozen=True)
class BitVector:
    """Immutable GF(2) vector; bit j of `bits` is coordinate j."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vector length must be nonnegative")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits do not fit in vector of length {self.n}")

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> BitVector:
        bits = 0
        for j in support:
            if not 0 <= j < n:
                raise ValueError(f"position {j} out of range for length {n}")
            bits |= 1 << j
        return cls(n, bits)

    def support(self) -> tuple[int, ...]:
        return tuple(bits_of(self.bits))

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: BitVector) -> BitVector:
        if self.n != other.n:
            raise ValueError("vector length mismatch")
        return BitVector(self.n, self.bits ^ other.bits)


@dataclass(frozen=True)
class BitMatrix:
    """Immutable 0/1 matrix over GF(2), one int per row."""

    rows: int
    cols: int
    row_words: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.row_words) != self.rows:
            raise ValueError("row count does not match number of row words")
        for w in self.row_words:
            if w < 0 or w >> self.cols:
                raise ValueError(f"row word does not fit in {self.cols} columns")

    @classmethod
    def from_supports(cls, cols: int, supports: Iterable[Iterable[int]]) -> BitMatrix:
        words = []
        for supp in supports:
            w = 0
            for j in supp:
                if not 0 <= j < cols:
                    raise ValueError(f"column {j} out of range for width {cols}")
                w |= 1 << j
            words.append(w)
        return cls(len(words), cols, tuple(words))

    @classmethod
    def from_words(cls, cols: int, words: Iterable[int]) -> BitMatrix:
        ws = tuple(words)
        return cls(len(ws), cols, ws)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_words[i])

    def row_support(self, i: int) -> tuple[int, ...]:
        return tuple(bits_of(self.row_words[i]))

    def row_weight(self, i: int) -> int:
        return self.row_words[i].bit_count()

    def row_weights(self) -> list[int]:
        return [w.bit_count() for w in self.row_words]

    def max_row_weight(self) -> int:
        return max((w.bit_count() for w in self.row_words), default=0)

    def total_weight(self) -> int:
        return sum(w.bit_count() for w in self.row_words)

    def col_degrees(self) -> list[int]:
        degs = [0] * self.cols
        for w in self.row_words:
            for j in bits_of(w):
                degs[j] += 1
        return degs

    def max_col_degree(self) -> int:
        return max(self.col_degrees(), default=0)

    def is_zero(self) -> bool:
        return all(w == 0 for w in self.row_words)

    def transpose(self) -> BitMatrix:
        out = [0] * self.cols
        for i, w in enumerate(self.row_words):
            for j in bits_of(w):
                out[j] |= 1 << i
        return BitMatrix(self.cols, self.rows, tuple(out))

    def stack(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.cols:
            raise ValueError("column count mismatch in stack")
        return BitMatrix(self.rows + other.rows, self.cols, self.row_words + other.row_words)

    def matmul(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch in matmul")
        out = []
        for w in self.row_words:
            acc = 0
            for j in bits_of(w):
                acc ^= other.row_words[j]
            out.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(out))

    def mul_vec(self, v: BitVector) -> BitVector:
        if v.n != self.cols:
            raise ValueError("vector length does not match column count")
        bits = 0
        for i, w in enumerate(self.row_words):
            if (w & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(self.rows, bits)


@dataclass(frozen=True)
class Rref:
    """Reduced row echelon form: pivot rows only, plus their pivot columns."""

    cols: int
    pivot_rows: tuple[int, ...]
    pivot_cols: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    def reduce_word(self, word: int) -> int:
        """Residual of `word` after elimination against the pivot rows."""
        for row, c in zip(self.pivot_rows, self.pivot_cols):
            if (word >> c) & 1:
                word ^= row
        return word


def rref(m: BitMatrix) -> Rref:
    work = list(m.row_words)
    pivot_cols: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == len(work):
            break
        bit = 1 << c
        pivot = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivot_cols.append(c)
        r += 1
    return Rref(m.cols, tuple(work[:r]), tuple(pivot_cols))


def rank(m: BitMatrix) -> int:
    """GF(2) rank; 0 <= rank <= min(rows, cols)."""
    return rref(m).rank


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of {v : m v = 0}, one vector per free column, ascending.

    The kernel of a matrix with no rows is the full space.
    """
    red = rref(m)
    pivot_set = set(red.pivot_cols)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        fbit = 1 << f
        for row, c in zip(red.pivot_rows, red.pivot_cols):
            if row & fbit:
                v |= 1 << c
        basis.append(BitVector(m.cols, v))
    return basis


def product_is_zero(a: BitMatrix, b_transposed: BitMatrix) -> bool:
    """True iff a @ b_transposed.T == 0 over GF(2)."""
    if a.cols != b_transposed.cols:
        raise ValueError(
            f"dimension mismatch: {a.cols} columns versus {b_transposed.cols}"
        )
    for wa in a.row_words:
        for wb in b_transposed.row_words:
            if (wa & wb).bit_count() & 1:
                return False
    return True


def same_row_space(a: BitMatrix, b: BitMatrix) -> bool:
    """True iff a and b generate the same row space."""
    if a.cols != b.cols:
        raise ValueError(f"column count mismatch: {a.cols} versus {b.cols}")
    ra = rank(a)
    rb = rank(b)
    if ra != rb:
        return False
    return rank(a.stack(b)) == ra


def in_row_space(v: BitVector, m: BitMatrix) -> bool:
    """True iff v is a GF(2) combination of the rows of m."""
    if v.n != m.cols:
        raise ValueError(f"length mismatch: vector {v.n} versus {m.cols} columns")
    return rref(m).reduce_word(v.bits) == 0
