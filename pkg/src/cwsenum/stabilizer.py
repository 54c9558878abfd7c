"""Validated stabilizer groups of maximal rank n (stabilizer states).

A group is given by n pairwise-commuting, GF(2)-independent generators
whose squares are +identity.  Those three conditions guarantee the group
has 2^n elements and never contains -identity, so it fixes a unique state.
Validation stores a row-reduced generator basis with its phases, which
makes membership queries O(n^2) instead of a 2^n scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .gf2 import Gf2Matrix, _lowest_set_bit, symplectic_product
from .pauli import PauliOperator, identity, multiply


class StabilizerError(ValueError):
    """Base class for generator validation failures."""


class WrongGeneratorCount(StabilizerError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"need exactly {expected} generators on {expected} qubits, got {got}")
        self.expected, self.got = expected, got


class NotCommuting(StabilizerError):
    def __init__(self, i: int, j: int):
        super().__init__(f"generators {i} and {j} anticommute")
        self.i, self.j = i, j


class NotIndependent(StabilizerError):
    def __init__(self, subset: tuple[int, ...]):
        super().__init__(f"generators {list(subset)} multiply to a phase times identity")
        self.subset = subset


class InvalidGeneratorPhase(StabilizerError):
    def __init__(self, i: int):
        super().__init__(
            f"generator {i} does not square to +identity; "
            "only ±(canonical Hermitian) operators can stabilize a state"
        )
        self.i = i


@dataclass(frozen=True)
class StabilizerGroup:
    """Immutable after validate(); all queries are read-only."""

    n: int
    generators: tuple[PauliOperator, ...]
    # Row-reduced mirror of the generators: bodies in RREF sorted by pivot,
    # phases carried along through the eliminating products.
    _reduced: tuple[PauliOperator, ...] = field(repr=False)
    _pivots: tuple[int, ...] = field(repr=False)

    @classmethod
    def validate(cls, gens) -> StabilizerGroup:
        gens = tuple(gens)
        if not gens:
            raise WrongGeneratorCount(0, 0)
        n = gens[0].n
        if any(g.n != n for g in gens) or len(gens) != n:
            raise WrongGeneratorCount(n, len(gens))
        for i, g in enumerate(gens):
            square = multiply(g, g)
            if square.phase_exp != 0:
                raise InvalidGeneratorPhase(i)
        for i in range(n):
            for j in range(i + 1, n):
                if symplectic_product(gens[i].body, gens[j].body):
                    raise NotCommuting(i, j)
        reduced, pivots = _phase_tracked_rref(gens)
        return cls(n, gens, reduced, pivots)

    def elements(self) -> Iterator[PauliOperator]:
        """All 2^n group elements with exact phases, in subset-index order.

        Element m is the product of the generators whose index bit is set in
        m, multiplied in increasing index order.
        """
        elems = [identity(self.n)]
        for g in self.generators:
            elems.extend(multiply(e, g) for e in elems)
        return iter(elems)

    def element_bodies(self) -> Iterator[int]:
        """The 2^n bodies as raw 2n-bit ints, in the same subset-index order."""
        bodies = [0]
        for g in self.generators:
            g_bits = g.body.bits
            bodies.extend(e ^ g_bits for e in bodies)
        return iter(bodies)

    def membership_phase(self, e: PauliOperator) -> Optional[int]:
        """Phase l with e = i^l · s for a group element s, or None.

        l = 0 means e itself is in the group; an expectation query on the
        stabilized state follows as <φ|e|φ> = i^l.
        """
        if e.n != self.n:
            raise ValueError(f"length mismatch: n={e.n} vs n={self.n}")
        cur = e.body.bits
        acc = identity(self.n)
        for pivot, row in zip(self._pivots, self._reduced):
            if cur >> pivot & 1:
                cur ^= row.body.bits
                acc = multiply(acc, row)
        if cur != 0:
            return None
        return (e.phase_exp - acc.phase_exp) % 4

    def body_basis(self) -> Gf2Matrix:
        """Row-reduced basis of the generator bodies (the classical code D)."""
        return Gf2Matrix(self.n, tuple(op.body for op in self._reduced))

    def body_pivots(self) -> tuple[int, ...]:
        return self._pivots


def _phase_tracked_rref(gens: tuple[PauliOperator, ...]):
    """RREF over the generator bodies, multiplying operators alongside.

    All generators commute, so the eliminating products are order-independent
    and every reduced row is a genuine group element with its exact phase.
    Raises NotIndependent naming a combining subset if a row vanishes.
    """
    reduced: list[PauliOperator] = []
    pivots: list[int] = []
    combos: list[int] = []  # which original generators each row combines
    for idx, g in enumerate(gens):
        cur, combo = g, 1 << idx
        for pivot, row, row_combo in zip(pivots, reduced, combos):
            if cur.body.bits >> pivot & 1:
                cur = multiply(cur, row)
                combo ^= row_combo
        if cur.body.is_zero():
            subset = tuple(k for k in range(len(gens)) if combo >> k & 1)
            raise NotIndependent(subset)
        pivot = _lowest_set_bit(cur.body.bits)
        for i, row in enumerate(reduced):
            if row.body.bits >> pivot & 1:
                reduced[i] = multiply(row, cur)
                combos[i] ^= combo
        at = sum(1 for p in pivots if p < pivot)
        reduced.insert(at, cur)
        pivots.insert(at, pivot)
        combos.insert(at, combo)
    return tuple(reduced), tuple(pivots)
