"""Command-line interface: search runs, gate-count comparisons, noise sweeps.

Exit codes: 0 success, 1 internal failure, 2 usage error. Structured output
is a flat ``key = value`` text document whose numerics match the human table
character for character; field names are documented in the README.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

import numpy as np

from .circuit import HISTOGRAM_KEYS, format_circuit, simulate
from .dictionary import (
    DictionarySpec,
    array_search,
    build_array_search_circuit,
    target_multiplicity,
)
from .grover import (
    OracleSpec,
    Variant,
    build_search_circuit,
    iteration_count,
    set_search,
)
from .noise import NoiseModel, run_noisy
from .sim import probabilities
from .viz import render_column, render_grid, write_image


class UsageError(Exception):
    """Bad flag values; reported on stderr with exit code 2."""


def _prob(x: float) -> str:
    return f"{x:.6f}"


def _residual(x: float) -> str:
    return f"{x:.3e}"


def _bits(value: int, width: int) -> str:
    return format(value, f"0{width}b")


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers: {text!r}")


def _parse_floats(text: str, what: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of numbers: {text!r}")


def _hist_text(hist: dict[str, int]) -> str:
    return " ".join(f"{k}:{hist[k]}" for k in HISTOGRAM_KEYS if k in hist)


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out is not None:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def _marked_from(args: argparse.Namespace) -> list[int]:
    marked = _parse_ints(args.marked, "--marked")
    if not marked:
        raise UsageError("--marked needs at least one index")
    for index in marked:
        if not 0 <= index < 1 << args.num_qubits:
            raise UsageError(
                f"marked index {index} out of range for {args.num_qubits} qubits"
            )
    return marked


def cmd_set_search(args: argparse.Namespace) -> int:
    marked = _marked_from(args)
    spec = OracleSpec(args.num_qubits, tuple(marked))
    iterations = (
        args.iterations
        if args.iterations is not None
        else iteration_count(1 << args.num_qubits, len(spec.marked))
    )
    if args.dump_circuit:
        _emit(args, format_circuit(build_search_circuit(spec, Variant(args.variant), iterations)))
        return 0
    result = set_search(args.num_qubits, marked, Variant(args.variant), iterations)
    n = args.num_qubits
    if args.emit_frames is not None:
        frame_dir = Path(args.emit_frames)
        frame_dir.mkdir(parents=True, exist_ok=True)
        for k in range(iterations + 1):
            state = simulate(build_search_circuit(spec, Variant(args.variant), k))
            path = frame_dir / f"iter_{k}.ppm"
            write_image(render_column(state), path)
            print(f"wrote {path}")
    marked_text = ",".join(str(i) for i in spec.marked)
    if args.format == "structured":
        lines = [
            "schema = groverkit.set-search.v1",
            f"num_qubits = {n}",
            f"marked = {marked_text}",
            f"variant = {args.variant}",
            f"iterations = {result.iterations}",
        ]
        lines += [
            f"prob[{j}] = {_prob(p)}" for j, p in enumerate(result.distribution)
        ]
        lines += [f"hist[{k}] = {result.histogram[k]}" for k in HISTOGRAM_KEYS if k in result.histogram]
        lines += [
            f"top_outcome = {result.top_outcome}",
            f"top_bits = {_bits(result.top_outcome, n)}",
            f"top_probability = {_prob(result.top_probability)}",
        ]
        _emit(args, "\n".join(lines))
        return 0
    lines = [
        f"set search: n={n} marked={marked_text} variant={args.variant} iterations={result.iterations}",
        "",
        "outcome  bits  probability",
    ]
    for j, p in enumerate(result.distribution):
        lines.append(f"{j:>7}  {_bits(j, n):>4}  {_prob(p):>11}")
    lines += [
        "",
        f"top outcome: {result.top_outcome} (bits {_bits(result.top_outcome, n)}), "
        f"probability {_prob(result.top_probability)}",
        f"gates: {_hist_text(result.histogram)}",
    ]
    _emit(args, "\n".join(lines))
    return 0


def _dictionary_spec(args: argparse.Namespace) -> DictionarySpec:
    coefficients = _parse_ints(args.poly, "--poly")
    if not coefficients:
        raise UsageError("--poly needs at least the constant coefficient")
    if len(coefficients) > 2:
        raise UsageError("--poly supports linear polynomials only (c0,c1)")
    if args.key_qubits < 1 or args.value_qubits < 1:
        raise UsageError("register widths must be at least 1")
    return DictionarySpec(args.key_qubits, args.value_qubits, tuple(coefficients))


def cmd_array_search(args: argparse.Namespace) -> int:
    spec = _dictionary_spec(args)
    variant = Variant(args.variant)
    multiplicity, _ = target_multiplicity(spec, args.target)
    iterations = (
        args.iterations
        if args.iterations is not None
        else iteration_count(1 << spec.key_qubits, max(multiplicity, 1))
    )
    if args.dump_circuit:
        _emit(
            args,
            format_circuit(build_array_search_circuit(spec, args.target, variant, iterations)),
        )
        return 0
    result = array_search(spec, args.target, variant, iterations)
    layout = result.layout
    n, m = spec.key_qubits, spec.value_qubits
    wrapped = args.target % (1 << m)
    if args.emit_frames is not None:
        frame_dir = Path(args.emit_frames)
        frame_dir.mkdir(parents=True, exist_ok=True)
        for k in range(result.iterations + 1):
            state = simulate(build_array_search_circuit(spec, args.target, variant, k))
            if args.frame_layout == "column":
                image = render_column(state)
            else:
                image = render_grid(state, layout)
            path = frame_dir / f"iter_{k}.ppm"
            write_image(image, path)
            print(f"wrote {path}")
    pairs = [
        (j, layout.signed(v), float(result.distribution[layout.basis_index(j, v)]))
        for j in range(1 << n)
        for v in range(1 << m)
    ]
    coeff_text = ",".join(str(c) for c in spec.coefficients)
    if args.format == "structured":
        lines = [
            "schema = groverkit.array-search.v1",
            f"key_qubits = {n}",
            f"value_qubits = {m}",
            f"poly = {coeff_text}",
            f"target = {args.target}",
            f"target_bits = {_bits(wrapped, m)}",
            f"multiplicity = {result.multiplicity}",
            f"target_attainable = {str(result.target_attainable).lower()}",
            f"variant = {args.variant}",
            f"iterations = {result.iterations}",
        ]
        lines += [f"prob[key={j},value={v}] = {_prob(p)}" for j, v, p in pairs]
        lines += [f"hist[{k}] = {result.histogram[k]}" for k in HISTOGRAM_KEYS if k in result.histogram]
        lines += [
            f"top_key = {result.top_key}",
            f"top_value = {result.top_value}",
            f"top_value_bits = {_bits(result.top_value % (1 << m), m)}",
            f"top_probability = {_prob(result.top_probability)}",
        ]
        _emit(args, "\n".join(lines))
        return 0
    lines = [
        f"array search: n={n} m={m} poly={coeff_text} variant={args.variant} "
        f"iterations={result.iterations}",
        f"target value: {args.target} (bits {_bits(wrapped, m)}), multiplicity {result.multiplicity}",
        "",
        "index  value  bits  probability",
    ]
    for j, v, p in pairs:
        lines.append(f"{j:>5}  {v:>5}  {_bits(v % (1 << m), m):>4}  {_prob(p):>11}")
    lines += [
        "",
        f"top outcome: index {result.top_key}, value {result.top_value} "
        f"(bits {_bits(result.top_value % (1 << m), m)}), "
        f"probability {_prob(result.top_probability)}",
        f"gates: {_hist_text(result.histogram)}",
    ]
    if not result.target_attainable:
        lines.append(
            f"note: no array entry equals {args.target}; "
            f"top outcome value is {result.top_value}"
        )
    _emit(args, "\n".join(lines))
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    marked = _marked_from(args)
    spec = OracleSpec(args.num_qubits, tuple(marked))
    n = args.num_qubits
    modified = Variant(args.variant)
    if modified is Variant.STANDARD:
        raise UsageError("--variant must be rx or ry for compare")
    iterations = (
        args.iterations
        if args.iterations is not None
        else iteration_count(1 << n, len(spec.marked))
    )
    standard = set_search(n, marked, Variant.STANDARD, iterations)
    variant_result = set_search(n, marked, modified, iterations)
    residual = 0.0
    for k in range(iterations + 1):
        a = probabilities(simulate(build_search_circuit(spec, Variant.STANDARD, k)))
        b = probabilities(simulate(build_search_circuit(spec, modified, k)))
        residual = max(residual, float(np.max(np.abs(a - b))))
    x_savings = 2 * n * iterations
    keys = [
        k
        for k in HISTOGRAM_KEYS
        if k in standard.histogram or k in variant_result.histogram
    ]
    marked_text = ",".join(str(i) for i in spec.marked)
    if args.format == "structured":
        lines = [
            "schema = groverkit.compare.v1",
            f"num_qubits = {n}",
            f"marked = {marked_text}",
            f"iterations = {iterations}",
            f"modified_variant = {args.variant}",
        ]
        lines += [f"hist.standard[{k}] = {standard.histogram.get(k, 0)}" for k in keys]
        lines += [f"hist.modified[{k}] = {variant_result.histogram.get(k, 0)}" for k in keys]
        lines += [
            f"x_savings = {x_savings}",
            f"residual = {_residual(residual)}",
        ]
        _emit(args, "\n".join(lines))
        return 0
    width = max(len(k) for k in keys) + 2
    header = "variant   " + "".join(f"{k:>{width}}" for k in keys)
    std_row = "standard  " + "".join(f"{standard.histogram.get(k, 0):>{width}}" for k in keys)
    mod_row = "modified  " + "".join(
        f"{variant_result.histogram.get(k, 0):>{width}}" for k in keys
    )
    lines = [
        f"gate-count comparison: set search n={n} marked={marked_text} iterations={iterations}",
        "",
        header,
        std_row,
        mod_row,
        "",
        f"X gates saved by the modified mirror: {x_savings} (2n per mirror per iteration)",
        f"equivalence residual (max |P_standard - P_modified|): {_residual(residual)}",
    ]
    _emit(args, "\n".join(lines))
    return 0


def cmd_noise_sweep(args: argparse.Namespace) -> int:
    marked = _marked_from(args)
    spec = OracleSpec(args.num_qubits, tuple(marked))
    n = args.num_qubits
    p1_levels = _parse_floats(args.p1, "--p1")
    if not p1_levels:
        raise UsageError("--p1 needs at least one noise level")
    if args.p2 is not None:
        p2_levels = _parse_floats(args.p2, "--p2")
        if len(p2_levels) != len(p1_levels):
            raise UsageError("--p2 must list one value per --p1 level")
    else:
        p2_levels = [args.p2_factor * p for p in p1_levels]
    if args.shots < 1 or args.num_seeds < 1:
        raise UsageError("--shots and --num-seeds must be positive")
    iterations = (
        args.iterations
        if args.iterations is not None
        else iteration_count(1 << n, len(spec.marked))
    )
    variants = (Variant.STANDARD, Variant(args.variant))
    if variants[1] is Variant.STANDARD:
        raise UsageError("--variant must be rx or ry for noise-sweep")
    circuits = {v: build_search_circuit(spec, v, iterations) for v in variants}
    exact = float(
        sum(probabilities(simulate(circuits[Variant.STANDARD]))[i] for i in spec.marked)
    )
    rows = []
    for p1, p2 in zip(p1_levels, p2_levels):
        for variant in variants:
            total = 0.0
            for k in range(args.num_seeds):
                shot = run_noisy(circuits[variant], NoiseModel(p1, p2, args.seed + k), args.shots)
                total += sum(shot.frequency(i) for i in spec.marked)
            rows.append((p1, p2, variant.value, total / args.num_seeds))
    marked_text = ",".join(str(i) for i in spec.marked)
    if args.format == "structured":
        lines = [
            "schema = groverkit.noise-sweep.v1",
            f"num_qubits = {n}",
            f"marked = {marked_text}",
            f"iterations = {iterations}",
            f"shots = {args.shots}",
            f"num_seeds = {args.num_seeds}",
            f"seed = {args.seed}",
            f"exact_success = {_prob(exact)}",
        ]
        lines += [
            f"success[p1={_prob(p1)},p2={_prob(p2)},variant={v}] = {_prob(mean)}"
            for p1, p2, v, mean in rows
        ]
        _emit(args, "\n".join(lines))
        return 0
    lines = [
        f"noise sweep: set search n={n} marked={marked_text} iterations={iterations} "
        f"shots={args.shots} seeds={args.num_seeds} (base seed {args.seed})",
        f"exact success probability: {_prob(exact)}",
        "",
        "      p1        p2   variant   mean_success",
    ]
    for p1, p2, v, mean in rows:
        lines.append(f"{_prob(p1):>8}  {_prob(p2):>8}  {v:<8}  {_prob(mean):>12}")
    _emit(args, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groverkit",
        description="Compare standard and rotation-based Grover iterates on "
        "set search and quantum-dictionary array search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, dump: bool = True) -> None:
        p.add_argument("--format", choices=("table", "structured"), default="table")
        p.add_argument("--out", type=Path, default=None, help="write output to this file")
        if dump:
            p.add_argument(
                "--dump-circuit",
                action="store_true",
                help="print the circuit gate listing instead of running",
            )

    ss = sub.add_parser("set-search", help="amplify marked indices in one register")
    ss.add_argument("-n", "--num-qubits", type=int, required=True)
    ss.add_argument("--marked", required=True, help="comma-separated basis indices")
    ss.add_argument("--variant", choices=("standard", "rx", "ry"), default="rx")
    ss.add_argument("--iterations", type=int, default=None)
    ss.add_argument(
        "--emit-frames", type=Path, default=None, help="write one column PPM per iteration here"
    )
    common(ss)
    ss.set_defaults(func=cmd_set_search)

    ar = sub.add_parser("array-search", help="search an encoded integer array")
    # let comma lists that start with a negative number (--poly -4,1) parse as values
    ar._negative_number_matcher = re.compile(r"^-\d+(?:[.,]-?\d+)*$")
    ar.add_argument("-n", "--key-qubits", type=int, required=True)
    ar.add_argument("-m", "--value-qubits", type=int, required=True)
    ar.add_argument("--poly", required=True, help="polynomial coefficients c0,c1 (constant first)")
    ar.add_argument("--target", type=int, required=True, help="value to search for (decimal, may be negative)")
    ar.add_argument("--variant", choices=("standard", "rx", "ry"), default="rx")
    ar.add_argument("--iterations", type=int, default=None)
    ar.add_argument("--emit-frames", type=Path, default=None, help="write one PPM per iteration here")
    ar.add_argument(
        "--frame-layout",
        choices=("grid", "column"),
        default="grid",
        help="render frames as key/value grids or flat columns",
    )
    common(ar)
    ar.set_defaults(func=cmd_array_search)

    cp = sub.add_parser("compare", help="gate counts and equivalence of both variants")
    cp.add_argument("-n", "--num-qubits", type=int, required=True)
    cp.add_argument("--marked", required=True, help="comma-separated basis indices")
    cp.add_argument("--variant", choices=("rx", "ry"), default="rx", help="which modified variant")
    cp.add_argument("--iterations", type=int, default=None)
    common(cp, dump=False)
    cp.set_defaults(func=cmd_compare)

    ns = sub.add_parser("noise-sweep", help="mean success probability under depolarizing noise")
    ns.add_argument("-n", "--num-qubits", type=int, required=True)
    ns.add_argument("--marked", required=True, help="comma-separated basis indices")
    ns.add_argument("--variant", choices=("rx", "ry"), default="rx", help="which modified variant")
    ns.add_argument("--iterations", type=int, default=None)
    ns.add_argument("--p1", default="0,0.005,0.01,0.02", help="comma-separated 1-qubit error rates")
    ns.add_argument("--p2", default=None, help="comma-separated controlled-gate error rates")
    ns.add_argument("--p2-factor", type=float, default=5.0, help="p2 = factor * p1 when --p2 is absent")
    ns.add_argument("--shots", type=int, default=8192)
    ns.add_argument("--num-seeds", type=int, default=3)
    ns.add_argument("--seed", type=int, default=7)
    common(ns, dump=False)
    ns.set_defaults(func=cmd_noise_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure contract: exit 1
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
