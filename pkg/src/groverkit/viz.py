"""Pixel rendering of quantum states: phase becomes hue, magnitude brightness.

Phase 0 maps to red and the hue advances counterclockwise around the HSV
wheel with increasing phase; saturation is fixed at 1 and brightness is the
amplitude magnitude normalized per image to the largest magnitude present,
so amplitude 0 is always black. Output is binary PPM (P6), which is
bit-exact across platforms.
"""
from __future__ import annotations

import cmath
import colorsys
from dataclasses import dataclass
from pathlib import Path

from .dictionary import RegisterLayout
from .sim import StateVector

_TWO_PI = 2.0 * cmath.pi


@dataclass(frozen=True)
class PixelImage:
    """Row-major 8-bit RGB raster."""

    width: int
    height: int
    pixels: bytes

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"degenerate image {self.width}x{self.height}")
        if len(self.pixels) != 3 * self.width * self.height:
            raise ValueError("pixel payload does not match dimensions")

    def rgb_at(self, x: int, y: int) -> tuple[int, int, int]:
        offset = 3 * (y * self.width + x)
        return tuple(self.pixels[offset : offset + 3])


def amplitude_rgb(amplitude: complex, max_magnitude: float) -> tuple[int, int, int]:
    """Color of one amplitude under the per-image normalization."""
    magnitude = abs(amplitude)
    if magnitude == 0.0 or max_magnitude == 0.0:
        return (0, 0, 0)
    hue = (cmath.phase(amplitude) % _TWO_PI) / _TWO_PI
    r, g, b = colorsys.hsv_to_rgb(hue, 1.0, magnitude / max_magnitude)
    return (round(r * 255), round(g * 255), round(b * 255))


def _paint(amplitudes: list[complex], width: int, height: int) -> PixelImage:
    max_magnitude = max(abs(a) for a in amplitudes)
    data = bytearray()
    for a in amplitudes:
        data.extend(amplitude_rgb(a, max_magnitude))
    return PixelImage(width, height, bytes(data))


def render_column(state: StateVector) -> PixelImage:
    """One-pixel-wide strip: row j (top to bottom) is the amplitude of index j."""
    return _paint(list(state.amplitudes), 1, 1 << state.num_qubits)


def render_grid(state: StateVector, layout: RegisterLayout) -> PixelImage:
    """Keys across, values down: pixel (column j, row v) is amplitude of |j>|v>.

    Value 0 sits in the top row and values increase downward.
    """
    if layout.num_qubits != state.num_qubits:
        raise ValueError(
            f"layout covers {layout.num_qubits} qubits, state has {state.num_qubits}"
        )
    width = 1 << layout.key_qubits
    height = 1 << layout.value_qubits
    amplitudes = [
        state.amplitudes[layout.basis_index(j, v)] for v in range(height) for j in range(width)
    ]
    return _paint(amplitudes, width, height)


def ppm_bytes(image: PixelImage) -> bytes:
    """Binary PPM (P6) encoding, maxval 255."""
    header = f"P6\n{image.width} {image.height}\n255\n".encode("ascii")
    return header + image.pixels


def write_image(image: PixelImage, path: str | Path) -> None:
    Path(path).write_bytes(ppm_bytes(image))


def nonblack_cells(image: PixelImage) -> set[tuple[int, int]]:
    """(column, row) positions of pixels that are not pure black."""
    return {
        (x, y)
        for y in range(image.height)
        for x in range(image.width)
        if image.rgb_at(x, y) != (0, 0, 0)
    }
