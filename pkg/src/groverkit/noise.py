"""Monte Carlo trajectory sampling with per-gate depolarizing noise.

Each trajectory replays the circuit exactly; after each gate one Bernoulli
draw (p1 for uncontrolled gates, p2 for gates with controls) decides whether
every qubit the gate touched gets an independent, uniformly chosen Pauli
kick (X, Y or Z). The final state is sampled once per trajectory. This is a
pure-state unraveling, not a density-matrix simulation: ensemble statistics
come from the shot count.

Trajectory t draws from default_rng([seed, t]), so counts are identical
whether trajectories run serially or in parallel.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import sim
from .circuit import Circuit

# Per-gate dense unitaries are cached up to this width; beyond it, gates are
# applied directly to the statevector.
_DENSE_LIMIT = 8

_PAULIS = ("X", "Y", "Z")


@dataclass(frozen=True)
class NoiseModel:
    """Depolarizing error probabilities per gate, plus the run seed."""

    p1: float
    p2: float
    seed: int = 0

    def __post_init__(self):
        if not (0.0 <= self.p1 <= 1.0 and 0.0 <= self.p2 <= 1.0):
            raise ValueError(f"probabilities must lie in [0, 1]: p1={self.p1} p2={self.p2}")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass(frozen=True)
class ShotResult:
    """Sampled outcome counts; counts sum to shots."""

    counts: dict[int, int]
    shots: int

    def frequency(self, outcome: int) -> float:
        return self.counts.get(outcome, 0) / self.shots


def _dense_unitary(gate, num_qubits: int) -> np.ndarray:
    # apply_matrix on a 2-D array mixes rows, so applying it to the identity
    # yields exactly the matrix U with (U @ state) == gate applied to state.
    dim = 1 << num_qubits
    matrix = np.eye(dim, dtype=complex)
    sim.apply_matrix(matrix, sim.gate_matrix(gate.kind, gate.param), gate.target, gate.controls)
    return matrix


def _dense_pauli(kind: str, qubit: int, num_qubits: int) -> np.ndarray:
    dim = 1 << num_qubits
    matrix = np.eye(dim, dtype=complex)
    sim.apply_matrix(matrix, sim.gate_matrix(kind), qubit, ())
    return matrix


def run_noisy(circuit: Circuit, noise: NoiseModel, shots: int) -> ShotResult:
    """Sample ``shots`` trajectories of the circuit under the noise model."""
    if shots < 1:
        raise ValueError("shots must be at least 1")
    n = circuit.num_qubits
    dim = 1 << n
    touched = [tuple(sorted((g.target, *g.controls))) for g in circuit.gates]
    probs_per_gate = [noise.p2 if g.controls else noise.p1 for g in circuit.gates]

    dense = n <= _DENSE_LIMIT
    if dense:
        unitaries = [_dense_unitary(g, n) for g in circuit.gates]
        paulis = {
            (kind, q): _dense_pauli(kind, q, n) for kind in _PAULIS for q in range(n)
        }
    else:
        matrices = [sim.gate_matrix(g.kind, g.param) for g in circuit.gates]

    counts: dict[int, int] = {}
    start = np.zeros(dim, dtype=complex)
    start[0] = 1.0
    for trajectory in range(shots):
        rng = np.random.default_rng([noise.seed, trajectory])
        state = start.copy()
        for i, gate in enumerate(circuit.gates):
            if dense:
                state = unitaries[i] @ state
            else:
                sim.apply_matrix(state, matrices[i], gate.target, gate.controls)
            p = probs_per_gate[i]
            if p > 0.0 and rng.random() < p:
                for q in touched[i]:
                    kind = _PAULIS[rng.integers(3)]
                    if dense:
                        state = paulis[(kind, q)] @ state
                    else:
                        sim.apply_matrix(state, sim.gate_matrix(kind), q, ())
        weights = np.abs(state) ** 2
        weights /= weights.sum()
        outcome = int(np.searchsorted(np.cumsum(weights), rng.random()))
        counts[outcome] = counts.get(outcome, 0) + 1
    return ShotResult(counts=counts, shots=shots)
