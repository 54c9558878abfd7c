"""Exact-rational enumerator polynomials and every combinatorial route to them.

All coefficients are fractions.Fraction values; nothing in this module
touches floating point (the pairwise distance kernel counts in int64 and
normalizes in Fractions).

Why the sign-sum formula for A works: with code projector
P = sum_j T_j |φ><φ| T_j*, the first trace factors as
Tr(EP) = sum_j <φ| T_j* E T_j |φ>.  Conjugating a Pauli E through a word
operator only flips its sign, by (-1)^{sp(e, t_j)}, and the expectation of
E on the stabilizer state is ±1 when E's body lies in the group body space
D and 0 otherwise (some group element anticommutes with any outside body).
So Tr(EP)·Tr(E*P) collapses to the squared character sum
( sum_j (-1)^{sp(e, t_j)} )^2 over e in D, with the group element's own
sign cancelling between the two factors.  That gives

    A_i = (1/K^2) * sum_{e in D, wt(e)=i} ( sum_j (-1)^{sp(e, t_j)} )^2.

The second enumerator counts triples directly:

    B_d = (1/K) * |{(i, j, w) : w in D, wt(t_i + t_j + w) = d}|,

which is exactly the coset-pair counting of the classical code C = union
of t_i + D, so it must and does agree with the literal pairwise distance
enumerator of C — the package's central cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Union

import numpy as np

from .cws import CwsCode
from .gf2 import BinaryVector, product_bits, weight_bits

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class EnumeratorPolynomial:
    """Degree-bounded polynomial with exact rational coefficients."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("degree bound must be nonnegative")
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"need {self.n + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Iterable[Rational]) -> EnumeratorPolynomial:
        return cls(n, tuple(Fraction(c) for c in coeffs))

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i <= self.n else Fraction(0)

    def evaluate(self, z: Rational) -> Fraction:
        z = Fraction(z)
        total = Fraction(0)
        power = Fraction(1)
        for c in self.coeffs:
            total += c * power
            power *= z
        return total

    def degree(self) -> int:
        for i in range(self.n, -1, -1):
            if self.coeffs[i]:
                return i
        return 0

    def __str__(self) -> str:
        """Ascending powers, zero terms dropped (except a lone constant)."""
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and not (i == 0 and self.degree() == 0):
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z_part = "z" if i == 1 else f"z^{i}"
                terms.append(z_part if c == 1 else f"{c} {z_part}")
        return " + ".join(terms) if terms else "0"


def _collect(codewords) -> list[BinaryVector]:
    vecs = list(codewords)
    if not vecs:
        raise ValueError("empty code")
    n = vecs[0].n
    if any(v.n != n for v in vecs):
        raise ValueError("mixed vector lengths")
    return vecs


def _metric_bound(metric: str, n: int) -> int:
    if metric == "symplectic":
        return n
    if metric == "hamming":
        return 2 * n
    raise ValueError(f"unknown metric {metric!r}")


def distance_enumerator(codewords, metric: str = "symplectic") -> EnumeratorPolynomial:
    """Ordered-pair distance distribution, normalized by the code size M.

    Coefficient i is |{(x, y) : d(x, y) = i}| / M, so coefficient 0 is
    exactly 1 iff the code has no duplicate vectors.  The pair scan is
    vectorized but integer-exact: per-bucket counts in int64, division in
    Fractions at the end.
    """
    vecs = _collect(codewords)
    m_size = len(vecs)
    n = vecs[0].n
    bound = _metric_bound(metric, n)

    cols = 2 * n
    table = np.zeros((m_size, cols), dtype=np.uint8)
    for r, v in enumerate(vecs):
        bits = v.bits
        for k in range(cols):
            table[r, k] = bits >> k & 1

    counts = np.zeros(bound + 1, dtype=np.int64)
    counts[0] += m_size  # the diagonal pairs (x, x)
    for r in range(m_size - 1):
        diff = table[r + 1 :] ^ table[r]
        if metric == "symplectic":
            dists = (diff[:, :n] | diff[:, n:]).sum(axis=1)
        else:
            dists = diff.sum(axis=1)
        counts += 2 * np.bincount(dists, minlength=bound + 1)

    return EnumeratorPolynomial(
        bound, tuple(Fraction(int(c), m_size) for c in counts)
    )


def weight_distribution(codewords, metric: str = "symplectic") -> EnumeratorPolynomial:
    """Plain weight counts, no normalization."""
    vecs = _collect(codewords)
    n = vecs[0].n
    bound = _metric_bound(metric, n)
    counts = [0] * (bound + 1)
    for v in vecs:
        w = weight_bits(n, v.bits) if metric == "symplectic" else v.bits.bit_count()
        counts[w] += 1
    return EnumeratorPolynomial(bound, tuple(Fraction(c) for c in counts))


def shor_laflamme_A(code: CwsCode) -> EnumeratorPolynomial:
    """First weight enumerator via the squared character sum over D.

    See the module docstring for why this equals the trace definition.
    A_0 = 1 and A(1) = 2^n / K always.
    """
    n, k_dim = code.n, code.K
    word_bits = [w.bits for w in code.words]
    sums = [0] * (n + 1)
    for e_bits in code.stabilizer.element_bodies():
        char_sum = 0
        for t_bits in word_bits:
            char_sum += -1 if product_bits(n, e_bits, t_bits) else 1
        sums[weight_bits(n, e_bits)] += char_sum * char_sum
    return EnumeratorPolynomial(
        n, tuple(Fraction(s, k_dim * k_dim) for s in sums)
    )


def shor_laflamme_B(code: CwsCode) -> EnumeratorPolynomial:
    """Second weight enumerator via triple counting over (i, j, w).

    Counts every triple, multiplicities included (coinciding word products
    are deliberately not deduplicated — the overcount is offset exactly).
    B_0 = 1 and B(1) = K·2^n always.
    """
    n, k_dim = code.n, code.K
    word_bits = [w.bits for w in code.words]
    bodies = list(code.stabilizer.element_bodies())
    counts = [0] * (n + 1)
    for i in range(k_dim):
        for j in range(i, k_dim):
            base = word_bits[i] ^ word_bits[j]
            mult = 1 if i == j else 2
            for w_bits in bodies:
                counts[weight_bits(n, base ^ w_bits)] += mult
    return EnumeratorPolynomial(n, tuple(Fraction(c, k_dim) for c in counts))


def macwilliams_transform(
    p: EnumeratorPolynomial, n: int, m_size: Rational, q: int = 2
) -> EnumeratorPolynomial:
    """Dual transform ((1+(q-1)z)^n / M) · p((1-z) / (1+(q-1)z)), exactly.

    q is the alphabet size: 2 for binary Hamming enumerators, 4 for
    symplectic ones.  M may be any positive rational.
    """
    m_size = Fraction(m_size)
    if m_size == 0:
        raise ValueError("M must not be zero")
    if m_size < 0:
        raise ValueError("M must be positive")
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if p.degree() > n:
        raise ValueError(f"polynomial degree {p.degree()} exceeds n={n}")

    out = [Fraction(0)] * (n + 1)
    for i in range(min(p.n, n) + 1):
        a_i = p.coeffs[i]
        if a_i == 0:
            continue
        # (1-z)^i * (1+(q-1)z)^(n-i), expanded by convolution
        low = [Fraction(comb(i, r) * (-1) ** r) for r in range(i + 1)]
        high = [Fraction(comb(n - i, s) * (q - 1) ** s) for s in range(n - i + 1)]
        for r, cl in enumerate(low):
            if cl == 0:
                continue
            for s, ch in enumerate(high):
                out[r + s] += a_i * cl * ch
    return EnumeratorPolynomial(n, tuple(c / m_size for c in out))


def quantum_distance(
    a: EnumeratorPolynomial, b: EnumeratorPolynomial
) -> Optional[int]:
    """Smallest i >= 1 with b_i > a_i, or None if the polynomials agree there."""
    if a.n != b.n:
        raise ValueError(f"degree bounds differ: {a.n} vs {b.n}")
    for i in range(1, a.n + 1):
        if b.coeffs[i] > a.coeffs[i]:
            return i
    return None


def classical_distance(p: EnumeratorPolynomial) -> Optional[int]:
    """Smallest i >= 1 with a nonzero coefficient, or None for constants."""
    for i in range(1, p.n + 1):
        if p.coeffs[i]:
            return i
    return None


def is_integral(p: EnumeratorPolynomial) -> bool:
    return all(c.denominator == 1 for c in p.coeffs)


def parse_polynomial(text: str, n: Optional[int] = None) -> EnumeratorPolynomial:
    """Parse "1 + 2/3 z^4 + 9 z^8" or a coefficient list "1,0,2/3".

    The degree bound defaults to the highest power present; pass n to pad.
    """
    text = text.strip().replace("−", "-")
    if not text:
        raise ValueError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    if "z" not in text:
        parts = text.split(",")
        if len(parts) > 1 or "," in text:
            for i, part in enumerate(parts):
                coeffs[i] = Fraction(part.strip())
        else:
            coeffs[0] = Fraction(text)
    else:
        for raw in text.replace("-", "+-").split("+"):
            term = raw.strip()
            if not term:
                continue
            negative = term.startswith("-")
            if negative:
                term = term[1:].strip()
            if "z" in term:
                coef_part, _, z_part = term.partition("z")
                coef_part = coef_part.strip().rstrip("*").strip()
                coef = Fraction(coef_part) if coef_part else Fraction(1)
                z_part = z_part.strip()
                if z_part.startswith("^"):
                    power = int(z_part[1:])
                elif z_part == "":
                    power = 1
                else:
                    raise ValueError(f"cannot parse term {raw.strip()!r}")
            else:
                coef = Fraction(term)
                power = 0
            if negative:
                coef = -coef
            coeffs[power] = coeffs.get(power, Fraction(0)) + coef
    top = max(coeffs) if coeffs else 0
    bound = top if n is None else n
    if top > bound:
        raise ValueError(f"polynomial degree {top} exceeds n={bound}")
    return EnumeratorPolynomial(
        bound, tuple(coeffs.get(i, Fraction(0)) for i in range(bound + 1))
    )
