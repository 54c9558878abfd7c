"""Phase-tracked Pauli operators.

An operator is i^phase_exp * X^a Z^b with phase_exp in Z_4 and (a|b) a
BinaryVector.  Products keep the exact phase via
X^a Z^b · X^c Z^d = (-1)^{b·c} X^{a+c} Z^{b+d}.  The letter forms I, X, Z,
Y used for rendering and parsing absorb one factor of i per Y, since
Y = i·XZ.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BinaryVector, product_bits, symplectic_product

_LETTER_TO_AB = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_AB_TO_LETTER = {v: k for k, v in _LETTER_TO_AB.items()}
_PREFIXES = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
_PREFIX_STRINGS = {0: "", 1: "i", 2: "-", 3: "-i"}


@dataclass(frozen=True, slots=True)
class PauliOperator:
    """i^phase_exp * X^a Z^b; equality compares phase and body exactly."""

    phase_exp: int
    body: BinaryVector

    def __post_init__(self) -> None:
        if self.phase_exp not in (0, 1, 2, 3):
            raise ValueError(f"phase_exp must be in Z_4, got {self.phase_exp}")

    @property
    def n(self) -> int:
        return self.body.n

    def is_identity_body(self) -> bool:
        return self.body.is_zero()

    def __str__(self) -> str:
        return to_string(self)


def identity(n: int) -> PauliOperator:
    return PauliOperator(0, BinaryVector.zero(n))


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Exact product; phase picks up 2·(b_p · a_q) from commuting Z past X."""
    if p.n != q.n:
        raise ValueError(f"length mismatch: n={p.n} vs n={q.n}")
    sign = (p.body.b & q.body.a).bit_count() & 1
    phase = (p.phase_exp + q.phase_exp + 2 * sign) % 4
    return PauliOperator(phase, p.body ^ q.body)


def adjoint(p: PauliOperator) -> PauliOperator:
    """Hermitian conjugate: (i^l X^a Z^b)* = i^{-l} (-1)^{a·b} X^a Z^b."""
    ab = (p.body.a & p.body.b).bit_count() & 1
    return PauliOperator((-p.phase_exp + 2 * ab) % 4, p.body)


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    return symplectic_product(p.body, q.body) == 0


def canonical_hermitian(body: BinaryVector) -> PauliOperator:
    """The unique Hermitian lift i^{a·b} X^a Z^b; it squares to +identity."""
    ab = (body.a & body.b).bit_count() & 1
    return PauliOperator(ab, body)


def conjugation_sign(e: PauliOperator, t: PauliOperator) -> int:
    """Sign in t* e t = ±e: +1 when they commute, -1 when they anticommute."""
    if e.n != t.n:
        raise ValueError(f"length mismatch: n={e.n} vs n={t.n}")
    return -1 if product_bits(e.n, e.body.bits, t.body.bits) else 1


def from_string(text: str) -> PauliOperator:
    """Parse a Pauli string such as "XIZ", "-YY" or "iXZ".

    Accepted prefixes: "", "+", "-", "i", "+i", "-i" (the unicode minus is
    also tolerated).  Letters are I, X, Z, Y; Y contributes phase i.
    """
    text = text.strip().replace("−", "-")
    split = 0
    while split < len(text) and text[split] not in _LETTER_TO_AB:
        split += 1
    prefix, letters = text[:split], text[split:]
    if prefix not in _PREFIXES:
        raise ValueError(f"invalid sign prefix {prefix!r} in {text!r}")
    if not letters or set(letters) - set(_LETTER_TO_AB):
        raise ValueError(f"invalid Pauli letters in {text!r}")
    n = len(letters)
    bits = 0
    y_count = 0
    for k, letter in enumerate(letters):
        a_bit, b_bit = _LETTER_TO_AB[letter]
        bits |= a_bit << k | b_bit << (n + k)
        y_count += a_bit & b_bit
    return PauliOperator((_PREFIXES[prefix] + y_count) % 4, BinaryVector(n, bits))


def to_string(p: PauliOperator) -> str:
    """Render with letters I, X, Z, Y and a prefix from {"", "i", "-", "-i"}."""
    letters = []
    y_count = 0
    for k in range(p.n):
        a_bit = p.body.bits >> k & 1
        b_bit = p.body.bits >> (p.n + k) & 1
        letters.append(_AB_TO_LETTER[(a_bit, b_bit)])
        y_count += a_bit & b_bit
    prefix = _PREFIX_STRINGS[(p.phase_exp - y_count) % 4]
    return prefix + "".join(letters)
