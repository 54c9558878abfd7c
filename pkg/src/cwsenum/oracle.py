"""Literal, slow evaluation of the trace definitions on explicit state vectors.

Floating point is quarantined here.  Coefficients come out of complex
trace sums and are snapped to exact rationals with bounded denominator
(K^2 for the first enumerator, K for the second) within SNAP_TOL = 1e-6;
anything further away raises, because it means the two computation routes
genuinely disagree.  The guard defaults to n <= 6 / K <= 16 and can be
raised explicitly up to the state-vector ceiling of n = 12.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cws import CwsCode
from .enumerator import EnumeratorPolynomial
from .pauli import PauliOperator, canonical_hermitian
from .stabilizer import StabilizerGroup

DEFAULT_MAX_QUBITS = 6
MAX_WORDS = 16
STATEVECTOR_MAX_QUBITS = 12
SNAP_TOL = 1e-6
NULL_TOL = 1e-9
OVERLAP_TOL = 1e-10


class OracleError(Exception):
    """Base class for oracle failures."""


class OracleTooLarge(OracleError):
    def __init__(self, n: int, limit: int, what: str = "qubits"):
        super().__init__(f"oracle guard: {n} {what} exceeds the limit of {limit}")
        self.n, self.limit = n, limit


class NullProjection(OracleError):
    def __init__(self):
        super().__init__("projector annihilated every basis seed (invalid group?)")


class SnapFailure(OracleError):
    def __init__(self, index: int, value: complex):
        super().__init__(
            f"coefficient {index} = {value} is not within {SNAP_TOL} "
            "of a rational with the expected denominator"
        )
        self.index, self.value = index, value


@dataclass(frozen=True)
class DenseState:
    """Unit-norm amplitude vector over the 2^n computational basis."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n,):
            raise ValueError("amplitude count must be 2^n")
        norm = float(np.linalg.norm(self.amplitudes))
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state norm {norm} is not 1 within 1e-12")


@dataclass(frozen=True)
class CodeBasis:
    """The K orthonormal basis states T_i|φ>; orthonormality is checked."""

    states: tuple[DenseState, ...]

    def __post_init__(self) -> None:
        mat = np.array([s.amplitudes for s in self.states])
        gram = mat @ mat.conj().T
        off = gram - np.eye(len(self.states))
        if np.max(np.abs(np.diag(off))) > 1e-12 or np.max(np.abs(off)) > 1e-10:
            raise OracleError("code basis states are not orthonormal")


def _parity(values: np.ndarray) -> np.ndarray:
    v = values.copy()
    for shift in (16, 8, 4, 2, 1):
        v ^= v >> shift
    return v & 1


def apply_pauli(p: PauliOperator, state: DenseState) -> DenseState:
    """Exact action: X permutes indices by XOR, Z flips signs, i^l globally."""
    if p.n != state.n:
        raise ValueError(f"length mismatch: n={p.n} vs n={state.n}")
    idx = np.arange(1 << state.n)
    src = idx ^ p.body.a
    signs = 1.0 - 2.0 * _parity(src & p.body.b)
    amps = (1j ** p.phase_exp) * signs * state.amplitudes[src]
    return DenseState(state.n, amps)


def statevector(group: StabilizerGroup) -> DenseState:
    """The unique state fixed by every group element.

    Applies the projector product over generators, prod (I + g)/2, to basis
    seeds in index order until one survives, then normalizes and spot-checks
    the generators.
    """
    if group.n > STATEVECTOR_MAX_QUBITS:
        raise OracleTooLarge(group.n, STATEVECTOR_MAX_QUBITS)
    size = 1 << group.n
    for seed in range(size):
        amps = np.zeros(size, dtype=complex)
        amps[seed] = 1.0
        for gen in group.generators:
            acted = _apply_raw(gen, amps)
            amps = (amps + acted) / 2.0
        norm_sq = float(np.vdot(amps, amps).real)
        if norm_sq > NULL_TOL:
            state = DenseState(group.n, amps / np.sqrt(norm_sq))
            for gen in group.generators:
                err = np.max(np.abs(_apply_raw(gen, state.amplitudes) - state.amplitudes))
                if err > 1e-10:
                    raise OracleError(f"projected state not fixed by a generator ({err})")
            return state
    raise NullProjection()


def _apply_raw(p: PauliOperator, amps: np.ndarray) -> np.ndarray:
    idx = np.arange(amps.shape[0])
    src = idx ^ p.body.a
    signs = 1.0 - 2.0 * _parity(src & p.body.b)
    return (1j ** p.phase_exp) * signs * amps[src]


def code_basis(code: CwsCode) -> CodeBasis:
    phi = statevector(code.stabilizer)
    states = tuple(
        apply_pauli(canonical_hermitian(w), phi) for w in code.words
    )
    return CodeBasis(states)


def _gram_stream(code: CwsCode):
    """Yield (weight, a·b parity, Gram matrix G[i, j] = <ψ_j| E |ψ_i>) for
    every phase-free error body E, iterating all 4^n of them."""
    n = code.n
    size = 1 << n
    basis = code_basis(code)
    psi = np.array([s.amplitudes for s in basis.states])
    psi_ct = psi.conj().T
    idx = np.arange(size)
    for a_mask in range(size):
        col = idx ^ a_mask
        for b_mask in range(size):
            signs = 1.0 - 2.0 * _parity(col & b_mask)
            acted = psi[:, col] * signs
            gram = acted @ psi_ct
            weight = ((a_mask | b_mask)).bit_count()
            ab_parity = (a_mask & b_mask).bit_count() & 1
            yield weight, ab_parity, gram


def _check_guard(code: CwsCode, max_qubits) -> None:
    limit = DEFAULT_MAX_QUBITS if max_qubits is None else max_qubits
    if code.n > limit:
        raise OracleTooLarge(code.n, limit)
    if code.n > DEFAULT_MAX_QUBITS:
        warnings.warn(
            f"oracle running above its default guard (n={code.n} > {DEFAULT_MAX_QUBITS})",
            RuntimeWarning,
            stacklevel=3,
        )
    if code.K > MAX_WORDS:
        raise OracleTooLarge(code.K, MAX_WORDS, what="words")


def oracle_enumerators(
    code: CwsCode, max_qubits: int | None = None
) -> tuple[EnumeratorPolynomial, EnumeratorPolynomial]:
    """Both enumerators straight from the trace definitions.

    A_i sums Tr(EP)·Tr(E*P), B_i sums the squared overlap magnitudes
    |<ψ_j| E |ψ_i>|^2; every observed overlap magnitude is checked against
    the 0-or-1 dichotomy at OVERLAP_TOL before the final rational snap.
    """
    _check_guard(code, max_qubits)
    n, k_dim = code.n, code.K
    a_acc = np.zeros(n + 1, dtype=complex)
    b_acc = np.zeros(n + 1, dtype=float)
    for weight, ab_parity, gram in _gram_stream(code):
        mags = np.abs(gram)
        deviation = float(np.min(np.stack([mags, np.abs(1.0 - mags)]), axis=0).max())
        if deviation > OVERLAP_TOL:
            raise OracleError(
                f"overlap magnitude {deviation} away from {{0, 1}} "
                "(exceeds the dichotomy tolerance)"
            )
        trace_ep = complex(np.trace(gram))
        trace_estar_p = (-1.0 if ab_parity else 1.0) * trace_ep
        a_acc[weight] += trace_ep * trace_estar_p
        b_acc[weight] += float(np.sum(mags * mags))
    a_poly = EnumeratorPolynomial(n, tuple(_snap(a_acc[i], k_dim * k_dim, i) for i in range(n + 1)))
    b_poly = EnumeratorPolynomial(n, tuple(_snap(b_acc[i], k_dim, i) for i in range(n + 1)))
    return a_poly, b_poly


def max_overlap_deviation(code: CwsCode, max_qubits: int | None = None) -> float:
    """Largest observed distance of any |<ψ_j| E |ψ_i>| from {0, 1}."""
    _check_guard(code, max_qubits)
    worst = 0.0
    for _, _, gram in _gram_stream(code):
        mags = np.abs(gram)
        worst = max(worst, float(np.min(np.stack([mags, np.abs(1.0 - mags)]), axis=0).max()))
    return worst


def _snap(value, denominator_bound: int, index: int) -> Fraction:
    value = complex(value)
    if abs(value.imag) > SNAP_TOL:
        raise SnapFailure(index, value)
    scaled = value.real * denominator_bound / (1 << 0)
    nearest = round(value.real * denominator_bound)
    snapped = Fraction(nearest, denominator_bound)
    if abs(value.real - float(snapped)) > SNAP_TOL:
        raise SnapFailure(index, value)
    return snapped
