"""Quantum-dictionary encoding of integer arrays and the array-search driver.

A key register of n qubits indexes 2**n array slots; a value register of m
qubits carries f(j) mod 2**m for a polynomial f with integer coefficients.
Values are written as geometric phase ramps against an inverse QFT and read
back in two's complement, so negative entries wrap the way an m-bit machine
integer would.

The inverse QFT here is swap-free. A pure H/controlled-phase ladder
necessarily delivers the value bits in reversed wire order, so RegisterLayout
assigns value bit t to wire n + (m-1-t) and every readout, oracle, and
rendering goes through that mapping. This keeps the controlled-phase count
at m(m-1)/2 instead of paying three CNOT-equivalents per swap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import sim
from .circuit import Circuit, Gate, compose, h, histogram, inverse, rx, ry, simulate, u1, x
from .grover import SearchResult, Variant, iteration_count, mirror_about_zero, mirror_about_ones, superposition_circuit


@dataclass(frozen=True)
class RegisterLayout:
    """Key register on qubits [0, n), value register on qubits [n, n+m).

    Value bit t lives on wire n + (m-1-t); see the module docstring.
    """

    key_qubits: int
    value_qubits: int

    def __post_init__(self):
        if self.key_qubits < 1 or self.value_qubits < 1:
            raise ValueError("both registers need at least one qubit")

    @property
    def num_qubits(self) -> int:
        return self.key_qubits + self.value_qubits

    def key_wires(self) -> range:
        return range(self.key_qubits)

    def value_wires(self) -> range:
        return range(self.key_qubits, self.num_qubits)

    def value_wire(self, bit: int) -> int:
        """Wire carrying bit ``bit`` of the decoded value."""
        if not 0 <= bit < self.value_qubits:
            raise ValueError(f"value bit {bit} out of range")
        return self.key_qubits + (self.value_qubits - 1 - bit)

    def basis_index(self, key: int, value: int) -> int:
        """Full-register basis index of |key> |value>."""
        n, m = self.key_qubits, self.value_qubits
        if not 0 <= key < 1 << n:
            raise ValueError(f"key {key} out of range")
        value %= 1 << m
        index = key
        for t in range(m):
            if (value >> t) & 1:
                index |= 1 << self.value_wire(t)
        return index

    def split(self, basis_index: int) -> tuple[int, int]:
        """Decode a full-register basis index into (key, value)."""
        key = basis_index & ((1 << self.key_qubits) - 1)
        value = 0
        for t in range(self.value_qubits):
            if (basis_index >> self.value_wire(t)) & 1:
                value |= 1 << t
        return key, value

    def signed(self, value: int) -> int:
        """Two's complement reading of an m-bit value."""
        m = self.value_qubits
        value %= 1 << m
        return value - (1 << m) if value >= 1 << (m - 1) else value


@dataclass(frozen=True)
class DictionarySpec:
    """Array of integers f(j) = sum_t coefficients[t] * j**t over j in [0, 2**n)."""

    key_qubits: int
    value_qubits: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if not self.coefficients:
            raise ValueError("need at least a constant coefficient")
        if self.key_qubits < 1 or self.value_qubits < 1:
            raise ValueError("both registers need at least one qubit")

    @property
    def layout(self) -> RegisterLayout:
        return RegisterLayout(self.key_qubits, self.value_qubits)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def value_at(self, key: int) -> int:
        """Exact integer f(key), before any mod-2**m wrap."""
        return sum(c * key**t for t, c in enumerate(self.coefficients))


def build_phase_ramp(
    theta: float, layout: RegisterLayout, controls: tuple[int, ...] = ()
) -> Circuit:
    """Geometric phase ramp over the value register: |k> gains e^{i k theta}.

    Realized as U1(2**l * theta) on value qubit l (wire n+l), one gate per
    value qubit, each carrying the given key-register controls. Here k is
    the raw little-endian integer over the value wires; the bit-reversed
    readout relabeling applies only after the inverse QFT.
    """
    controls = tuple(controls)
    for c in controls:
        if c in layout.value_wires():
            raise ValueError(f"control {c} overlaps the value register")
    gates = [
        u1(theta * (1 << l), layout.key_qubits + l, controls=controls)
        for l in range(layout.value_qubits)
    ]
    return Circuit(layout.num_qubits, tuple(gates))


def _qft_h_gate(variant: Variant, wire: int) -> Gate:
    # The modified variants trade each ladder H for a rotation:
    # RX(-pi/2) = S H S and RY(-pi/2) = Z H, so only diagonal phases change.
    variant = Variant(variant)
    if variant is Variant.STANDARD:
        return h(wire)
    if variant is Variant.RX:
        return rx(-math.pi / 2, wire)
    return ry(-math.pi / 2, wire)


def inverse_qft(layout: RegisterLayout, variant: Variant = Variant.STANDARD) -> Circuit:
    """Swap-free inverse QFT on the value register.

    One superposition gate per value wire plus m(m-1)/2 controlled phases
    with angles -pi/2**d. The resulting wire order is bit-reversed, which the
    layout's value_wire mapping already accounts for.
    """
    wires = list(layout.value_wires())
    m = len(wires)
    gates: list[Gate] = []
    for i in range(m - 1, -1, -1):
        gates.append(_qft_h_gate(variant, wires[i]))
        for l in range(i - 1, -1, -1):
            gates.append(u1(-math.pi / 2 ** (i - l), wires[l], controls=(wires[i],)))
    return Circuit(layout.num_qubits, tuple(gates))


def build_value_encoder(spec: DictionarySpec, variant: Variant = Variant.STANDARD) -> Circuit:
    """Encoder mapping the uniform superposition to sum_j |j>|f(j) mod 2**m>.

    For linear f = c0 + c1*j: one uncontrolled phase ramp for c0, one ramp
    per key qubit i (controlled on it) for c1 * 2**i, then the inverse QFT.
    Applied after a full-register superposition layer of the same variant.
    """
    if spec.degree > 1:
        raise ValueError(f"only linear polynomials are supported, got degree {spec.degree}")
    layout = spec.layout
    unit = 2.0 * math.pi / (1 << spec.value_qubits)
    c0 = spec.coefficients[0]
    c1 = spec.coefficients[1] if spec.degree >= 1 else 0
    parts = [build_phase_ramp(unit * c0, layout)]
    parts.extend(
        build_phase_ramp(unit * c1 * (1 << i), layout, controls=(i,))
        for i in layout.key_wires()
    )
    parts.append(inverse_qft(layout, variant))
    return compose(*parts)


def build_value_oracle(layout: RegisterLayout, value: int) -> Circuit:
    """Phase-flip every basis state whose value register reads ``value``.

    Same X-sandwich construction as the set-search oracle, confined to the
    value register; the multi-controlled phase is filed under nCU1 to match
    how full-register controlled phases are counted.
    """
    value %= 1 << layout.value_qubits
    zero_wires = [
        layout.value_wire(t) for t in range(layout.value_qubits) if not (value >> t) & 1
    ]
    wires = list(layout.value_wires())
    flip = u1(math.pi, wires[-1], controls=wires[:-1], hist_key="nCU1")
    gates = [x(w) for w in zero_wires] + [flip] + [x(w) for w in zero_wires]
    return Circuit(layout.num_qubits, tuple(gates))


def target_multiplicity(spec: DictionarySpec, target_value: int) -> tuple[int, bool]:
    """(number of keys whose wrapped value matches, whether any exact integer match exists)."""
    modulus = 1 << spec.value_qubits
    wrapped = target_value % modulus
    matches = 0
    exact = False
    for j in range(1 << spec.key_qubits):
        v = spec.value_at(j)
        if v % modulus == wrapped:
            matches += 1
            if v == target_value:
                exact = True
    return matches, exact


@dataclass(frozen=True)
class ArraySearchResult(SearchResult):
    """Set-search result plus the register layout and target bookkeeping."""

    layout: RegisterLayout
    target_value: int
    multiplicity: int
    target_attainable: bool

    @property
    def top_key(self) -> int:
        return self.layout.split(self.top_outcome)[0]

    @property
    def top_value(self) -> int:
        """Two's complement reading of the top outcome's value register."""
        return self.layout.signed(self.layout.split(self.top_outcome)[1])


def build_array_search_circuit(
    spec: DictionarySpec, target_value: int, variant: Variant, iterations: int
) -> Circuit:
    """Encoder preparation followed by ``iterations`` array-search iterates.

    Each iterate is: oracle on the value register, un-encode, superposition
    layer, mirror (about zero for standard, about ones for the modified
    variants), inverse superposition layer, re-encode.
    """
    variant = Variant(variant)
    layout = spec.layout
    n_all = layout.num_qubits
    encoder = build_value_encoder(spec, variant)
    prep = compose(superposition_circuit(n_all, variant), encoder)
    if iterations == 0:
        return prep
    mirror = (
        mirror_about_zero(n_all) if variant is Variant.STANDARD else mirror_about_ones(n_all)
    )
    iterate = compose(
        build_value_oracle(layout, target_value),
        inverse(encoder),
        superposition_circuit(n_all, variant),
        mirror,
        superposition_circuit(n_all, variant, dagger=True),
        encoder,
    )
    return compose(prep, *([iterate] * iterations))


def array_search(
    spec: DictionarySpec,
    target_value: int,
    variant: Variant = Variant.RX,
    iterations: int | None = None,
) -> ArraySearchResult:
    """Search the encoded array for a value; the result reveals value and index.

    The iterate count comes from the classically computed multiplicity of the
    wrapped target. A target no key maps to still runs (with the single-match
    schedule) and is flagged via ``target_attainable``.
    """
    multiplicity, exact = target_multiplicity(spec, target_value)
    if iterations is None:
        iterations = iteration_count(1 << spec.key_qubits, max(multiplicity, 1))
    circuit = build_array_search_circuit(spec, target_value, variant, iterations)
    distribution = sim.probabilities(simulate(circuit))
    return ArraySearchResult(
        distribution=distribution,
        histogram=histogram(circuit),
        iterations=iterations,
        top_outcome=int(np.argmax(distribution)),
        layout=spec.layout,
        target_value=target_value,
        multiplicity=multiplicity,
        target_attainable=exact,
    )
