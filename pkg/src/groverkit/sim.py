"""Dense statevector simulation over little-endian qubit registers.

Bit b of a basis index corresponds to qubit b, so applying X to qubit k
maps basis index j to j XOR 2**k. Amplitudes are complex128 throughout;
every gate is an exact 2x2 unitary applied to a target qubit, optionally
conditioned on all control qubits being 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .circuit import Gate

# Dense complex128 beyond 24 qubits exceeds desk-scale memory (< 1 GiB).
MAX_QUBITS = 24

_SQRT2_INV = 1.0 / math.sqrt(2.0)

_FIXED_MATRICES = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class StateVector:
    """Pure state of ``num_qubits`` qubits as 2**num_qubits complex amplitudes."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if len(self.amplitudes) != 1 << self.num_qubits:
            raise ValueError(
                f"expected {1 << self.num_qubits} amplitudes, got {len(self.amplitudes)}"
            )


def zero_state(num_qubits: int) -> StateVector:
    """All-zeros computational basis state |0...0>."""
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise ValueError(f"num_qubits must be in [1, {MAX_QUBITS}], got {num_qubits}")
    amplitudes = np.zeros(1 << num_qubits, dtype=complex)
    amplitudes[0] = 1.0
    return StateVector(num_qubits, amplitudes)


def random_state(num_qubits: int, rng: np.random.Generator) -> StateVector:
    """Haar-ish random normalized state, for property tests."""
    raw = rng.standard_normal(1 << num_qubits) + 1j * rng.standard_normal(1 << num_qubits)
    return StateVector(num_qubits, raw / np.linalg.norm(raw))


def gate_matrix(kind: str, param: float | None = None) -> np.ndarray:
    """2x2 unitary for a gate kind.

    RX(t) = cos(t/2) I - i sin(t/2) X, RY likewise about Y, and
    U1(lam) = diag(1, e^{i lam}).
    """
    if kind in _FIXED_MATRICES:
        return _FIXED_MATRICES[kind]
    if kind == "RX":
        c, s = math.cos(param / 2.0), math.sin(param / 2.0)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if kind == "RY":
        c, s = math.cos(param / 2.0), math.sin(param / 2.0)
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind == "U1":
        return np.array([[1, 0], [0, np.exp(1j * param)]], dtype=complex)
    raise ValueError(f"unknown gate kind {kind!r}")


def apply_matrix(
    amplitudes: np.ndarray,
    matrix: np.ndarray,
    target: int,
    controls: tuple[int, ...] = (),
) -> None:
    """Apply a 2x2 unitary to ``target`` in place, gated on ``controls`` all being 1."""
    dim = len(amplitudes)
    index = np.arange(dim)
    selected = ((index >> target) & 1) == 0
    for c in controls:
        selected &= ((index >> c) & 1) == 1
    i0 = index[selected]
    i1 = i0 | (1 << target)
    a0 = amplitudes[i0]
    a1 = amplitudes[i1]
    amplitudes[i0] = matrix[0, 0] * a0 + matrix[0, 1] * a1
    amplitudes[i1] = matrix[1, 0] * a0 + matrix[1, 1] * a1


def _check_indices(num_qubits: int, target: int, controls: tuple[int, ...]) -> None:
    for q in (target, *controls):
        if not 0 <= q < num_qubits:
            raise ValueError(f"qubit index {q} out of range for {num_qubits} qubits")
    if target in controls or len(set(controls)) != len(controls):
        raise ValueError(f"qubit index collision: target {target}, controls {controls}")


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Return the state transformed by one gate; the input is left untouched."""
    _check_indices(state.num_qubits, gate.target, gate.controls)
    amplitudes = state.amplitudes.copy()
    apply_matrix(amplitudes, gate_matrix(gate.kind, gate.param), gate.target, gate.controls)
    return StateVector(state.num_qubits, amplitudes)


def probabilities(state: StateVector) -> np.ndarray:
    """Born-rule probability of each basis index: |amplitude|^2."""
    return np.abs(state.amplitudes) ** 2


def global_phase_free_distance(a: StateVector, b: StateVector) -> float:
    """min over unit phases phi of ||a - phi*b||; zero iff equal up to global phase.

    Evaluated as the norm of the actual difference at the minimizing phase,
    which stays accurate to machine precision for nearly equal states (the
    closed form sqrt(|a|^2 + |b|^2 - 2|<a,b>|) cancels catastrophically).
    """
    if a.num_qubits != b.num_qubits:
        raise ValueError(f"width mismatch: {a.num_qubits} vs {b.num_qubits}")
    overlap = np.vdot(b.amplitudes, a.amplitudes)
    phase = overlap / abs(overlap) if abs(overlap) > 0.0 else 1.0
    return float(np.linalg.norm(a.amplitudes - phase * b.amplitudes))
