"""GF(2) vectors in symplectic (a|b) layout, plus the metrics and
row-reduction everything else in the package is built on.

A length-2n vector is packed into a single Python int: bit k-1 holds a_k
and bit n+k-1 holds b_k, so the leftmost character of a written row
"a_1...a_n|b_1...b_n" is bit 0.  Addition is XOR, every vector is its own
inverse, and n = 64 (or more) still costs one int per vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional


@dataclass(frozen=True, slots=True)
class BinaryVector:
    """A 2n-bit vector (a|b): the binary shadow of an n-qubit Pauli operator."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 <= self.bits < 1 << (2 * self.n):
            raise ValueError(f"bits do not fit in {2 * self.n} columns")

    @classmethod
    def zero(cls, n: int) -> BinaryVector:
        return cls(n, 0)

    @classmethod
    def from_string(cls, text: str) -> BinaryVector:
        """Parse a row like ``"110|011"`` (the bar and spaces are optional)."""
        clean = text.strip().replace("|", "").replace(" ", "")
        if not clean or len(clean) % 2:
            raise ValueError(f"need an even, positive number of bits: {text!r}")
        bad = set(clean) - {"0", "1"}
        if bad:
            raise ValueError(f"invalid characters {sorted(bad)} in {text!r}")
        bits = 0
        for k, char in enumerate(clean):
            if char == "1":
                bits |= 1 << k
        return cls(len(clean) // 2, bits)

    @property
    def a(self) -> int:
        """X block as an n-bit mask (bit k-1 is a_k)."""
        return self.bits & ((1 << self.n) - 1)

    @property
    def b(self) -> int:
        """Z block as an n-bit mask."""
        return self.bits >> self.n

    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: BinaryVector) -> BinaryVector:
        _check_same_n(self, other)
        return BinaryVector(self.n, self.bits ^ other.bits)

    def to_string(self, bar: bool = True) -> str:
        chars = "".join("1" if self.bits >> k & 1 else "0" for k in range(2 * self.n))
        return chars[: self.n] + "|" + chars[self.n :] if bar else chars

    def __str__(self) -> str:
        return self.to_string()


def _check_same_n(x: BinaryVector, y: BinaryVector) -> None:
    if x.n != y.n:
        raise ValueError(f"length mismatch: n={x.n} vs n={y.n}")


def hamming_distance(x: BinaryVector, y: BinaryVector) -> int:
    """Number of raw bit positions (out of 2n) where x and y differ."""
    _check_same_n(x, y)
    return (x.bits ^ y.bits).bit_count()


def hamming_weight(x: BinaryVector) -> int:
    return x.bits.bit_count()


def symplectic_weight(v: BinaryVector) -> int:
    """Number of qubit slots k with (a_k, b_k) != (0, 0)."""
    return weight_bits(v.n, v.bits)


def symplectic_distance(u: BinaryVector, v: BinaryVector) -> int:
    """Number of qubit slots where (a_k, b_k) differs; equals symplectic_weight(u ^ v)."""
    _check_same_n(u, v)
    return weight_bits(u.n, u.bits ^ v.bits)


def symplectic_product(u: BinaryVector, v: BinaryVector) -> int:
    """The alternating form a·b' + a'·b mod 2; zero iff the Pauli operators commute."""
    _check_same_n(u, v)
    return product_bits(u.n, u.bits, v.bits)


def weight_bits(n: int, bits: int) -> int:
    """symplectic_weight on a raw 2n-bit int."""
    mask = (1 << n) - 1
    return ((bits | bits >> n) & mask).bit_count()


def product_bits(n: int, x: int, y: int) -> int:
    """symplectic_product on raw 2n-bit ints."""
    mask = (1 << n) - 1
    cross = ((x & mask) & (y >> n)) ^ ((x >> n) & (y & mask))
    return cross.bit_count() & 1


@dataclass(frozen=True, slots=True)
class Gf2Matrix:
    """Rows of one common length 2n; order is significant."""

    n: int
    rows: tuple[BinaryVector, ...]

    def __post_init__(self) -> None:
        for row in self.rows:
            if row.n != self.n:
                raise ValueError(f"row length mismatch: n={row.n} vs n={self.n}")

    @classmethod
    def from_rows(cls, rows) -> Gf2Matrix:
        rows = tuple(rows)
        if not rows:
            raise ValueError("cannot infer n from an empty row list")
        return cls(rows[0].n, rows)

    @classmethod
    def from_strings(cls, lines) -> Gf2Matrix:
        return cls.from_rows(BinaryVector.from_string(line) for line in lines)

    @property
    def width(self) -> int:
        return 2 * self.n

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[BinaryVector]:
        return iter(self.rows)

    def __getitem__(self, i: int) -> BinaryVector:
        return self.rows[i]


def _lowest_set_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def row_reduce(m: Gf2Matrix) -> tuple[int, Gf2Matrix, list[int]]:
    """Reduced row echelon form over GF(2).

    Pivots are the leftmost columns (column k of the written row is bit k),
    each pivot column is cleared in every other row, and the basis rows come
    out sorted by pivot column, so the output is canonical for a given row
    space.  Returns (rank, basis, pivot column indices).
    """
    reduced: list[int] = []  # RREF rows, kept sorted by pivot column
    pivots: list[int] = []
    for row in m.rows:
        cur = row.bits
        for pivot, basis_row in zip(pivots, reduced):
            if cur >> pivot & 1:
                cur ^= basis_row
        if cur == 0:
            continue
        pivot = _lowest_set_bit(cur)
        for i, basis_row in enumerate(reduced):
            if basis_row >> pivot & 1:
                reduced[i] = basis_row ^ cur
        at = sum(1 for p in pivots if p < pivot)
        reduced.insert(at, cur)
        pivots.insert(at, pivot)
    basis = Gf2Matrix(m.n, tuple(BinaryVector(m.n, bits) for bits in reduced))
    return len(reduced), basis, pivots


def solve_membership(v: BinaryVector, basis: Gf2Matrix) -> Optional[list[int]]:
    """Express v in the row space of a row-reduced basis.

    Returns the unique coefficient list (one bit per basis row) or None if v
    lies outside the span.  The basis must be in the reduced form produced by
    row_reduce.
    """
    if v.n != basis.n:
        raise ValueError(f"dimension mismatch: n={v.n} vs n={basis.n}")
    coeffs = [0] * len(basis.rows)
    cur = v.bits
    for i, row in enumerate(basis.rows):
        pivot = _lowest_set_bit(row.bits)
        if cur >> pivot & 1:
            cur ^= row.bits
            coeffs[i] = 1
    return coeffs if cur == 0 else None
