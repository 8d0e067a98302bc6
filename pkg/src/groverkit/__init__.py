"""groverkit: statevector toolkit for comparing Grover-iterate constructions.

The standard iterate prepares with Hadamards and reflects about the all-zeros
state; the modified iterates prepare with RX(pi/2) or RY(pi/2) and reflect
about the all-ones state, saving the X-gate sandwich of every mirror. Both
set search over a single register and array search over an entangled
key/value dictionary are supported, along with gate-count histograms,
depolarizing-noise trajectory sampling, and pixel-based state rendering.
"""

from .circuit import (
    Circuit,
    Gate,
    compose,
    format_circuit,
    h,
    histogram,
    inverse,
    rx,
    ry,
    simulate,
    u1,
    x,
    z,
)
from .dictionary import (
    ArraySearchResult,
    DictionarySpec,
    RegisterLayout,
    array_search,
    build_array_search_circuit,
    build_phase_ramp,
    build_value_encoder,
    build_value_oracle,
    inverse_qft,
)
from .grover import (
    OracleSpec,
    SearchResult,
    Variant,
    build_iterate,
    build_oracle,
    build_search_circuit,
    iteration_count,
    mirror_about_ones,
    mirror_about_zero,
    set_search,
    superposition_circuit,
)
from .noise import NoiseModel, ShotResult, run_noisy
from .sim import (
    StateVector,
    apply_gate,
    global_phase_free_distance,
    probabilities,
    zero_state,
)
from .viz import PixelImage, render_column, render_grid, write_image

__version__ = "0.1.0"
