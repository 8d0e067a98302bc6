import math

import numpy as np
import pytest

from groverkit.circuit import Gate, h, rx, u1, x
from groverkit.sim import (
    StateVector,
    apply_gate,
    global_phase_free_distance,
    probabilities,
    random_state,
    zero_state,
)

SQ2 = 1 / math.sqrt(2)


def test_zero_state_one_qubit():
    assert np.allclose(zero_state(1).amplitudes, [1, 0])


def test_zero_state_two_qubits():
    assert np.allclose(zero_state(2).amplitudes, [1, 0, 0, 0])


def test_zero_state_three_qubits():
    state = zero_state(3)
    assert state.amplitudes[0] == 1
    assert np.count_nonzero(state.amplitudes) == 1


@pytest.mark.parametrize("width", [0, -1, 25])
def test_zero_state_rejects_bad_width(width):
    with pytest.raises(ValueError):
        zero_state(width)


def test_hadamard_on_zero():
    state = apply_gate(zero_state(1), h(0))
    assert np.allclose(state.amplitudes, [SQ2, SQ2])


def test_rx_half_pi_on_zero():
    # RX(t) = cos(t/2) I - i sin(t/2) X
    state = apply_gate(zero_state(1), rx(math.pi / 2, 0))
    assert np.allclose(state.amplitudes, [SQ2, -1j * SQ2])


def test_x_flips_qubit_one_little_endian():
    # X on qubit 1 of |00> lands on basis index 2
    state = apply_gate(zero_state(2), x(1))
    assert np.allclose(state.amplitudes, [0, 0, 1, 0])


def test_x_maps_index_j_to_j_xor_2k():
    rng = np.random.default_rng(3)
    for n in (2, 3, 5):
        state = random_state(n, rng)
        for k in range(n):
            flipped = apply_gate(state, x(k))
            expect = state.amplitudes[np.arange(1 << n) ^ (1 << k)]
            assert np.array_equal(flipped.amplitudes, expect)


def test_apply_gate_rejects_out_of_range_target():
    with pytest.raises(ValueError):
        apply_gate(zero_state(2), x(2))


def test_apply_gate_rejects_control_collision():
    # collision is caught at gate construction, range at application
    with pytest.raises(ValueError):
        Gate("U1", 1, (1,), math.pi)
    with pytest.raises(ValueError):
        apply_gate(zero_state(2), u1(math.pi, 1, controls=(5,)))


def test_controlled_u1_applies_only_when_controls_set():
    state = apply_gate(apply_gate(zero_state(2), x(0)), x(1))  # |11>
    state = apply_gate(state, u1(math.pi, 1, controls=(0,)))
    assert np.allclose(state.amplitudes, [0, 0, 0, -1])
    other = apply_gate(zero_state(2), x(1))  # |10>, control qubit 0 is 0
    other = apply_gate(other, u1(math.pi, 1, controls=(0,)))
    assert np.allclose(other.amplitudes, [0, 0, 1, 0])


def test_probabilities_modulus_squared():
    state = StateVector(1, np.array([SQ2, -1j * SQ2]))
    assert np.allclose(probabilities(state), [0.5, 0.5])


def test_probabilities_of_zero_state():
    assert np.allclose(probabilities(zero_state(2)), [1, 0, 0, 0])


def test_probabilities_uniform():
    state = zero_state(2)
    for q in range(2):
        state = apply_gate(state, h(q))
    assert np.allclose(probabilities(state), [0.25] * 4)
    assert abs(probabilities(state).sum() - 1.0) < 1e-10


def test_phase_free_distance_identity_and_global_phase():
    rng = np.random.default_rng(11)
    state = random_state(3, rng)
    assert global_phase_free_distance(state, state) < 1e-12
    rotated = StateVector(3, -1j * state.amplitudes)
    assert global_phase_free_distance(state, rotated) < 1e-12


def test_phase_free_distance_orthogonal():
    a = zero_state(1)
    b = apply_gate(a, x(0))
    assert abs(global_phase_free_distance(a, b) - math.sqrt(2)) < 1e-12


def test_phase_free_distance_width_mismatch():
    with pytest.raises(ValueError):
        global_phase_free_distance(zero_state(1), zero_state(2))


def test_norm_preserved_over_long_random_circuit():
    # 10_000 random gates on 8 qubits: norm must stay within 1e-8 of unity.
    rng = np.random.default_rng(99)
    n = 8
    amplitudes = zero_state(n).amplitudes
    state = StateVector(n, amplitudes)
    makers = [
        lambda q: h(q),
        lambda q: x(q),
        lambda q: rx(rng.uniform(-math.pi, math.pi), q),
        lambda q: u1(rng.uniform(-math.pi, math.pi), q),
    ]
    for _ in range(10_000):
        gate = makers[rng.integers(len(makers))](int(rng.integers(n)))
        state = apply_gate(state, gate)
    assert abs(np.linalg.norm(state.amplitudes) - 1.0) < 1e-8


def test_gate_then_inverse_restores_state():
    rng = np.random.default_rng(5)
    state = random_state(4, rng)
    for gate in (h(2), x(0), rx(0.7, 1), u1(-1.3, 3), u1(2.1, 2, controls=(0, 1))):
        back = apply_gate(apply_gate(state, gate), gate.inverse())
        assert np.max(np.abs(back.amplitudes - state.amplitudes)) < 1e-10
