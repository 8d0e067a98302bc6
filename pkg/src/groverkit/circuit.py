"""Symbolic circuit IR: gates, composition, inversion, and gate-count histograms.

Circuits are immutable sequences of gates and are counted exactly as
constructed; no fusion or cancellation ever happens, because the point of
the histograms is to compare constructions by design.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from . import sim
from .sim import StateVector

GATE_KINDS = frozenset({"H", "X", "Z", "RX", "RY", "U1"})
_PARAMETRIC = frozenset({"RX", "RY", "U1"})
# Only phase-type gates may carry controls; this keeps every gate countable
# under the histogram keys below.
_CONTROLLABLE = frozenset({"U1", "Z"})

# Fixed display/report order for histogram keys.
HISTOGRAM_KEYS = ("H", "RX", "RY", "X", "Z", "U1", "CU1", "CCU1", "nCU1")


@dataclass(frozen=True)
class Gate:
    """A single gate instance: kind, target, optional controls and angle.

    ``hist_key`` overrides the structural histogram key; the array-search
    oracle uses it to file its value-register phase under nCU1 regardless of
    control count.
    """

    kind: str
    target: int
    controls: tuple[int, ...] = ()
    param: float | None = None
    hist_key: str | None = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if (self.param is None) == (self.kind in _PARAMETRIC):
            raise ValueError(f"gate {self.kind} with param={self.param}")
        if self.controls and self.kind not in _CONTROLLABLE:
            raise ValueError(f"controls not supported on {self.kind}")
        if self.target in self.controls or len(set(self.controls)) != len(self.controls):
            raise ValueError(f"qubit index collision in {self}")
        if min((self.target, *self.controls)) < 0:
            raise ValueError("negative qubit index")

    def inverse(self) -> Gate:
        """Dagger of this gate: rotations and phases negate, the rest are involutions."""
        if self.kind in _PARAMETRIC:
            return Gate(self.kind, self.target, self.controls, -self.param, self.hist_key)
        return self

    def histogram_key(self) -> str:
        if self.hist_key is not None:
            return self.hist_key
        n_controls = len(self.controls)
        if n_controls == 0:
            return self.kind
        # A controlled Z is the same unitary as controlled U1(pi) and is
        # counted in the same column.
        if n_controls == 1:
            return "CU1"
        if n_controls == 2:
            return "CCU1"
        return "nCU1"


def h(target: int) -> Gate:
    return Gate("H", target)


def x(target: int) -> Gate:
    return Gate("X", target)


def z(target: int, controls: Iterable[int] = ()) -> Gate:
    return Gate("Z", target, tuple(controls))


def rx(theta: float, target: int) -> Gate:
    return Gate("RX", target, param=theta)


def ry(theta: float, target: int) -> Gate:
    return Gate("RY", target, param=theta)


def u1(lam: float, target: int, controls: Iterable[int] = (), hist_key: str | None = None) -> Gate:
    return Gate("U1", target, tuple(controls), lam, hist_key)


@dataclass(frozen=True)
class Circuit:
    """An ordered gate sequence over a fixed register width."""

    num_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("circuit needs at least one qubit")
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            if max((gate.target, *gate.controls)) >= self.num_qubits:
                raise ValueError(f"{gate} out of range for {self.num_qubits} qubits")

    def __len__(self) -> int:
        return len(self.gates)


def compose(*circuits: Circuit) -> Circuit:
    """Concatenate circuits of equal width, left to right."""
    if not circuits:
        raise ValueError("compose needs at least one circuit")
    widths = {c.num_qubits for c in circuits}
    if len(widths) > 1:
        raise ValueError(f"width mismatch: {sorted(widths)}")
    gates: list[Gate] = []
    for c in circuits:
        gates.extend(c.gates)
    return Circuit(circuits[0].num_qubits, tuple(gates))


def inverse(circuit: Circuit) -> Circuit:
    """Reverse the gate order and replace each gate by its dagger."""
    return Circuit(circuit.num_qubits, tuple(g.inverse() for g in reversed(circuit.gates)))


def histogram(circuit: Circuit) -> dict[str, int]:
    """Per-key gate counts; keys with zero count are omitted."""
    return dict(Counter(g.histogram_key() for g in circuit.gates))


def simulate(circuit: Circuit, initial: StateVector | None = None) -> StateVector:
    """Apply all gates in order to ``initial`` (default |0...0>)."""
    if initial is None:
        initial = sim.zero_state(circuit.num_qubits)
    elif initial.num_qubits != circuit.num_qubits:
        raise ValueError(
            f"width mismatch: circuit {circuit.num_qubits}, state {initial.num_qubits}"
        )
    amplitudes = initial.amplitudes.copy()
    for gate in circuit.gates:
        sim.apply_matrix(
            amplitudes, sim.gate_matrix(gate.kind, gate.param), gate.target, gate.controls
        )
    return StateVector(circuit.num_qubits, amplitudes)


def format_gate(gate: Gate) -> str:
    name = gate.kind if gate.param is None else f"{gate.kind}({gate.param!r})"
    if gate.controls:
        return f"{name} {','.join(map(str, gate.controls))} -> {gate.target}"
    return f"{name} -> {gate.target}"


def format_circuit(circuit: Circuit) -> str:
    """Stable plain-text listing, one gate per line: KIND(params) controls -> target."""
    return "\n".join(format_gate(g) for g in circuit.gates)
