import math

import numpy as np
import pytest

from groverkit.circuit import compose, simulate
from groverkit.dictionary import DictionarySpec, build_value_encoder
from groverkit.grover import Variant, superposition_circuit
from groverkit.sim import StateVector, zero_state
from groverkit.viz import (
    PixelImage,
    amplitude_rgb,
    nonblack_cells,
    ppm_bytes,
    render_column,
    render_grid,
    write_image,
)

SQ2 = 1 / math.sqrt(2)


def hue_degrees(rgb):
    import colorsys

    r, g, b = (c / 255 for c in rgb)
    return colorsys.rgb_to_hsv(r, g, b)[0] * 360


def brightness(rgb):
    return max(rgb)


def test_column_of_zero_state():
    img = render_column(zero_state(1))
    assert (img.width, img.height) == (1, 2)
    assert img.rgb_at(0, 0) == (255, 0, 0)  # phase 0 is red at full intensity
    assert img.rgb_at(0, 1) == (0, 0, 0)


def test_column_opposite_phases():
    state = StateVector(1, np.array([SQ2, -SQ2]))
    img = render_column(state)
    top, bottom = img.rgb_at(0, 0), img.rgb_at(0, 1)
    assert brightness(top) == brightness(bottom)
    assert abs((hue_degrees(bottom) - hue_degrees(top)) % 360 - 180) < 1.5


def test_column_minus_i_phase():
    state = StateVector(1, np.array([SQ2, -1j * SQ2]))
    img = render_column(state)
    assert abs(hue_degrees(img.rgb_at(0, 1)) - 270) < 1.5


def test_amplitude_zero_is_black_regardless_of_phase():
    assert amplitude_rgb(0j, 1.0) == (0, 0, 0)


def test_grid_of_dictionary_state():
    spec = DictionarySpec(3, 3, (-4, 1))
    state = simulate(
        compose(superposition_circuit(6, Variant.STANDARD), build_value_encoder(spec))
    )
    img = render_grid(state, spec.layout)
    assert (img.width, img.height) == (8, 8)
    assert nonblack_cells(img) == {(j, (j - 4) % 8) for j in range(8)}


def test_grid_of_product_zero_state():
    spec = DictionarySpec(2, 2, (0, 1))
    img = render_grid(zero_state(4), spec.layout)
    assert nonblack_cells(img) == {(0, 0)}


def test_grid_layout_mismatch():
    spec = DictionarySpec(2, 2, (0, 1))
    with pytest.raises(ValueError):
        render_grid(zero_state(3), spec.layout)


def test_standard_and_rx_grids_same_intensity_different_hue():
    from groverkit.dictionary import build_array_search_circuit

    spec = DictionarySpec(3, 3, (-4, 1))
    imgs = {}
    for variant in (Variant.STANDARD, Variant.RX):
        state = simulate(build_array_search_circuit(spec, -3, variant, 1))
        imgs[variant] = render_grid(state, spec.layout)
    std, rx = imgs[Variant.STANDARD], imgs[Variant.RX]
    hues_differ = False
    for y in range(8):
        for x in range(8):
            a, b = std.rgb_at(x, y), rx.rgb_at(x, y)
            assert abs(brightness(a) - brightness(b)) <= 1
            if a != b:
                hues_differ = True
    assert hues_differ


def test_ppm_bytes_header_and_size():
    img = render_column(zero_state(1))  # 1 x 2
    data = ppm_bytes(img)
    assert data.startswith(b"P6\n1 2\n255\n")
    assert len(data) == len(b"P6\n1 2\n255\n") + 6


def test_write_image_deterministic(tmp_path):
    img = render_column(zero_state(2))
    a, b = tmp_path / "a.ppm", tmp_path / "b.ppm"
    write_image(img, a)
    write_image(img, b)
    assert a.read_bytes() == b.read_bytes()


def test_degenerate_image_rejected():
    with pytest.raises(ValueError):
        PixelImage(0, 2, b"")


def test_intensity_monotone_in_magnitude():
    amps = np.array([0.1, 0.25, 0.25j, -0.4, 0.7], dtype=complex)
    mags = np.abs(amps)
    colors = [amplitude_rgb(a, mags.max()) for a in amps]
    for i in range(len(amps)):
        for j in range(len(amps)):
            if mags[i] > mags[j]:
                assert brightness(colors[i]) >= brightness(colors[j])


def test_global_phase_leaves_intensity_channel_unchanged():
    rng = np.random.default_rng(71)
    raw = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    state = StateVector(3, raw / np.linalg.norm(raw))
    rotated = StateVector(3, state.amplitudes * np.exp(0.77j))
    img_a, img_b = render_column(state), render_column(rotated)
    for y in range(8):
        assert brightness(img_a.rgb_at(0, y)) == brightness(img_b.rgb_at(0, y))


def test_grid_colors_match_column_colors():
    spec = DictionarySpec(2, 2, (1, 1))
    state = simulate(
        compose(superposition_circuit(4, Variant.RX), build_value_encoder(spec, Variant.RX))
    )
    layout = spec.layout
    grid = render_grid(state, layout)
    column = render_column(state)
    for key in range(4):
        for value in range(4):
            assert grid.rgb_at(key, value) == column.rgb_at(0, layout.basis_index(key, value))
