"""Amplitude-amplification building blocks and the set-search driver.

Two interchangeable constructions of the Grover iterate are provided. The
standard one prepares with Hadamards and reflects about the all-zeros state,
which costs an X-gate sandwich on every qubit. The modified one prepares
with RX(pi/2) (or RY(pi/2)) rotations and reflects about the all-ones state
instead, dropping the 2n X gates of each mirror. Both produce identical
measurement distributions at every iteration; only amplitude phases differ.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import sim
from .circuit import Circuit, Gate, compose, h, histogram, rx, ry, simulate, u1, x


class Variant(str, Enum):
    """Which superposition gate drives the iterate."""

    STANDARD = "standard"
    RX = "rx"
    RY = "ry"


@dataclass(frozen=True)
class OracleSpec:
    """Marked basis indices to phase-flip within a register of ``num_qubits``."""

    num_qubits: int
    marked: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "marked", tuple(sorted(set(self.marked))))
        if not self.marked:
            raise ValueError("marked set must be non-empty")
        if self.marked[0] < 0 or self.marked[-1] >= 1 << self.num_qubits:
            raise ValueError(
                f"marked indices {self.marked} out of range for {self.num_qubits} qubits"
            )


@dataclass(frozen=True)
class SearchResult:
    """Final distribution plus the bookkeeping needed to reproduce it."""

    distribution: np.ndarray
    histogram: dict[str, int]
    iterations: int
    top_outcome: int

    @property
    def top_probability(self) -> float:
        return float(self.distribution[self.top_outcome])


def _phase_flip_all_ones(num_qubits: int) -> Gate:
    """Multi-controlled U1(pi): -1 on the all-ones state, identity elsewhere."""
    return u1(math.pi, num_qubits - 1, controls=range(num_qubits - 1))


def build_oracle(spec: OracleSpec) -> Circuit:
    """Phase oracle flipping the sign of every marked index.

    Each marked index gets its own block: X on every qubit whose bit is 0,
    a full-register multi-controlled U1(pi), and the X gates again.
    Consecutive blocks are not merged, so histogram counts stay additive.
    """
    n = spec.num_qubits
    gates: list[Gate] = []
    for index in spec.marked:
        zeros = [q for q in range(n) if not (index >> q) & 1]
        gates.extend(x(q) for q in zeros)
        gates.append(_phase_flip_all_ones(n))
        gates.extend(x(q) for q in zeros)
    return Circuit(n, tuple(gates))


def mirror_about_zero(num_qubits: int) -> Circuit:
    """Reflection negating the amplitude of |0...0>: X sandwich around the phase flip."""
    wrap = tuple(x(q) for q in range(num_qubits))
    return Circuit(num_qubits, wrap + (_phase_flip_all_ones(num_qubits),) + wrap)


def mirror_about_ones(num_qubits: int) -> Circuit:
    """Reflection negating the amplitude of |1...1>; needs no X gates at all."""
    return Circuit(num_qubits, (_phase_flip_all_ones(num_qubits),))


def superposition_circuit(num_qubits: int, variant: Variant, dagger: bool = False) -> Circuit:
    """One layer of the variant's superposition gate on every qubit.

    H for the standard variant (self-inverse); RX(pi/2) or RY(pi/2) for the
    modified variants, negated when ``dagger`` is set.
    """
    variant = Variant(variant)
    if variant is Variant.STANDARD:
        gates = tuple(h(q) for q in range(num_qubits))
    else:
        theta = -math.pi / 2 if dagger else math.pi / 2
        maker = rx if variant is Variant.RX else ry
        gates = tuple(maker(theta, q) for q in range(num_qubits))
    return Circuit(num_qubits, gates)


def build_iterate(spec: OracleSpec, variant: Variant) -> Circuit:
    """One Grover iterate for the given oracle.

    Standard: oracle, H layer, mirror about zero, H layer.
    Modified: oracle, rotation layer, mirror about ones, inverse rotation
    layer. The -i factor that makes the rotation algebra exact is a global
    phase and is dropped.
    """
    n = spec.num_qubits
    variant = Variant(variant)
    oracle = build_oracle(spec)
    if variant is Variant.STANDARD:
        layer = superposition_circuit(n, variant)
        return compose(oracle, layer, mirror_about_zero(n), layer)
    return compose(
        oracle,
        superposition_circuit(n, variant),
        mirror_about_ones(n),
        superposition_circuit(n, variant, dagger=True),
    )


def iteration_count(num_states: int, num_marked: int) -> int:
    """floor((pi/4) * sqrt(num_states / num_marked)) iterate applications."""
    if num_marked < 1:
        raise ValueError("num_marked must be at least 1")
    if num_marked > num_states:
        raise ValueError("num_marked exceeds num_states")
    return math.floor(math.pi / 4.0 * math.sqrt(num_states / num_marked))


def build_search_circuit(
    spec: OracleSpec, variant: Variant, iterations: int
) -> Circuit:
    """Preparation layer followed by ``iterations`` Grover iterates."""
    prep = superposition_circuit(spec.num_qubits, variant)
    iterate = build_iterate(spec, variant)
    return compose(prep, *([iterate] * iterations)) if iterations else prep


def set_search(
    num_qubits: int,
    marked,
    variant: Variant = Variant.RX,
    iterations: int | None = None,
) -> SearchResult:
    """Run a full set search and report the outcome distribution.

    ``iterations`` defaults to iteration_count for the marked-set size; ties
    in the final distribution resolve to the smallest basis index.
    """
    spec = OracleSpec(num_qubits, tuple(marked))
    if iterations is None:
        iterations = iteration_count(1 << num_qubits, len(spec.marked))
    circuit = build_search_circuit(spec, variant, iterations)
    distribution = sim.probabilities(simulate(circuit))
    return SearchResult(
        distribution=distribution,
        histogram=histogram(circuit),
        iterations=iterations,
        top_outcome=int(np.argmax(distribution)),
    )
