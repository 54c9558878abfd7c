"""Codeword stabilized codes and their associated classical codes.

A code is a rank-n stabilizer group plus K word vectors t_1..t_K (Pauli
bodies, phases irrelevant here).  Validation enforces t_1 = 0, pairwise
commuting words, and pairwise-distinct cosets of the group's body space D.
The classical side is the union of cosets t_i + D, which carries the same
distance information as the quantum code's second weight enumerator.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .gf2 import BinaryVector, Gf2Matrix, symplectic_product
from .pauli import canonical_hermitian, PauliOperator
from .stabilizer import StabilizerGroup


class CwsError(ValueError):
    """Base class for code validation failures."""


class RowCountMismatch(CwsError):
    pass


class CosetCollision(CwsError):
    def __init__(self, i: int, j: int):
        super().__init__(f"words {i} and {j} fall in the same coset of the stabilizer bodies")
        self.i, self.j = i, j


class WordsNotCommuting(CwsError):
    def __init__(self, i: int, j: int):
        super().__init__(f"word operators {i} and {j} anticommute")
        self.i, self.j = i, j


class NormalizationWarning(UserWarning):
    """First word row was nonzero; all words were translated by it."""


@dataclass(frozen=True)
class CwsCode:
    """Immutable after build(); the central input object for all enumerators."""

    stabilizer: StabilizerGroup
    words: tuple[BinaryVector, ...]

    @property
    def n(self) -> int:
        return self.stabilizer.n

    @property
    def K(self) -> int:
        return len(self.words)

    @classmethod
    def build(
        cls,
        n: int,
        stabilizer_rows: Gf2Matrix,
        word_rows: Gf2Matrix,
        signs: Optional[Sequence[int]] = None,
        allow_noncommuting_words: bool = False,
    ) -> CwsCode:
        """Validate and assemble a code from raw binary rows.

        Stabilizer rows are lifted to their canonical Hermitian operators and
        optionally signed (+1/-1 per row).  A nonzero first word row triggers
        translation of every word by it, with a NormalizationWarning.
        """
        if stabilizer_rows.n != n or len(stabilizer_rows) != n:
            raise RowCountMismatch(
                f"need exactly {n} stabilizer rows of length {2 * n}, "
                f"got {len(stabilizer_rows)} rows with n={stabilizer_rows.n}"
            )
        if word_rows.n != n or len(word_rows) < 1:
            raise RowCountMismatch(
                f"need at least 1 word row of length {2 * n}, "
                f"got {len(word_rows)} rows with n={word_rows.n}"
            )

        ops = [canonical_hermitian(row) for row in stabilizer_rows]
        if signs is not None:
            signs = list(signs)
            if len(signs) != n:
                raise RowCountMismatch(f"need {n} signs, got {len(signs)}")
            if any(s not in (1, -1) for s in signs):
                raise ValueError("signs must be +1 or -1")
            ops = [
                PauliOperator((op.phase_exp + (2 if s == -1 else 0)) % 4, op.body)
                for op, s in zip(ops, signs)
            ]
        group = StabilizerGroup.validate(ops)

        words = list(word_rows.rows)
        if not words[0].is_zero():
            shift = words[0]
            words = [w ^ shift for w in words]
            warnings.warn(
                "first word row was nonzero; translated all words by it",
                NormalizationWarning,
                stacklevel=2,
            )

        basis = group.body_basis()
        pivots = group.body_pivots()
        reps = [_coset_rep(w.bits, basis, pivots) for w in words]
        for i in range(len(words)):
            for j in range(i + 1, len(words)):
                if reps[i] == reps[j]:
                    raise CosetCollision(i, j)
        for i in range(len(words)):
            for j in range(i + 1, len(words)):
                if symplectic_product(words[i], words[j]):
                    if allow_noncommuting_words:
                        warnings.warn(
                            f"word operators {i} and {j} anticommute",
                            UserWarning,
                            stacklevel=2,
                        )
                    else:
                        raise WordsNotCommuting(i, j)
        return cls(group, tuple(words))

    def classical_code(self) -> ClassicalCodeView:
        return ClassicalCodeView(
            n=self.n,
            K=self.K,
            d_basis=Gf2Matrix(self.n, tuple(g.body for g in self.stabilizer.generators)),
            words=self.words,
        )

    def is_additive(self) -> bool:
        """True iff the union of word cosets is closed under XOR.

        Works on canonical coset labels: reduction against the row-reduced
        body basis is linear, so closure of the K labels decides closure of
        the whole K·2^n vector set.
        """
        basis = self.stabilizer.body_basis()
        pivots = self.stabilizer.body_pivots()
        reps = {_coset_rep(w.bits, basis, pivots) for w in self.words}
        rep_list = list(reps)
        for i, x in enumerate(rep_list):
            for y in rep_list[i:]:
                if x ^ y not in reps:
                    return False
        return True


def _coset_rep(bits: int, basis: Gf2Matrix, pivots: tuple[int, ...]) -> int:
    for pivot, row in zip(pivots, basis.rows):
        if bits >> pivot & 1:
            bits ^= row.bits
    return bits


@dataclass(frozen=True)
class ClassicalCodeView:
    """The union of cosets t_i + D, streamed without materializing."""

    n: int
    K: int
    d_basis: Gf2Matrix  # generator rows for the linear code D (the S-bodies)
    words: tuple[BinaryVector, ...]

    def __len__(self) -> int:
        return self.K << self.n

    def codewords(self) -> Iterator[BinaryVector]:
        """Each t_i + s exactly once: i in word order, s in subset-index order."""
        bodies = [0]
        for row in self.d_basis.rows:
            row_bits = row.bits
            bodies.extend(e ^ row_bits for e in bodies)
        for word in self.words:
            w_bits = word.bits
            for s_bits in bodies:
                yield BinaryVector(self.n, w_bits ^ s_bits)
