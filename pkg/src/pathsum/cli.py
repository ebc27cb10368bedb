"""Command-line interface.

Subcommands cover the whole pipeline: parse, compile, amplitude,
distribution, decision, sign, verify, sample, and stats. Exit codes:
0 success, 1 usage or input error, 2 verification mismatch,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from .circuit import (
    BasisString,
    Circuit,
    GateKind,
    Mode,
    all_basis_strings,
    bits_to_index,
    decision_transform,
    parse_bits,
    parse_circuit,
    format_bits,
    random_circuit,
    render_circuit,
    sign_transform,
)
from .compile_z2 import BoundViolationError, compile_circuit, normalize, path_count_check
from .counting import DEFAULT_CAP, CapExceededError, amplitude, distribution
from .mixed import amplitude_mixed, compile_mixed, cyclotomic_amplitude, eliminate
from .montecarlo import GENERATOR, estimate_amplitude
from .refsim import MAX_QUBITS, simulate
from . import __version__

__all__ = ["main"]


def _read_circuit(path: str) -> Circuit:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_circuit(handle.read())


def _bits_arg(text: str, num_qubits: int, what: str) -> BasisString:
    bits = parse_bits(text)
    if len(bits) != num_qubits:
        raise ValueError(
            f"{what} basis string needs {num_qubits} bit(s), got {len(bits)}"
        )
    return bits


def _prepared(args: argparse.Namespace) -> Circuit:
    circuit = _read_circuit(args.circuit)
    if getattr(args, "normalize", False):
        circuit = normalize(circuit)
    return circuit


def _cmd_parse(args: argparse.Namespace) -> int:
    circuit = _read_circuit(args.circuit)
    if args.format == "json":
        gates = []
        for gate in circuit.gates:
            if gate.kind is GateKind.P:
                gates.append(["p", gate.power, *gate.qubits])
            else:
                gates.append([gate.kind.value, *gate.qubits])
        print(
            json.dumps(
                {
                    "mode": circuit.mode.value,
                    "qubits": circuit.num_qubits,
                    "gates": gates,
                }
            )
        )
    else:
        print(
            f"ok: mode={circuit.mode.value} qubits={circuit.num_qubits} "
            f"gates={len(circuit.gates)} hadamards={circuit.num_hadamards}"
        )
    return 0


def _cmd_compile(args: argparse.Namespace) -> int:
    circuit = _prepared(args)
    input_bits = _bits_arg(args.input, circuit.num_qubits, "--in")
    if circuit.mode is Mode.Z2:
        system = compile_circuit(circuit, input_bits)
        doc = system.to_dict()
    else:
        doc = compile_mixed(circuit, input_bits).to_dict()
    if args.format == "text":
        print(f"h = {doc['h']}")
        for j, text in enumerate(doc["outputs"]):
            print(f"B_{j} = {text}")
        if circuit.mode is Mode.Z2:
            print(f"phase = {doc['phase']}")
        else:
            rendered = " + ".join(f"{c}*({f})" for c, f in doc["phase"]) or "0"
            print(f"phase = {rendered}")
    else:
        print(json.dumps(doc, indent=2))
    return 0


def _format_complex(value: complex) -> str:
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real:.12f} {sign} {abs(value.imag):.12f}i"


def _cmd_amplitude(args: argparse.Namespace) -> int:
    circuit = _prepared(args)
    input_bits = _bits_arg(args.input, circuit.num_qubits, "--in")
    output_bits = _bits_arg(args.output, circuit.num_qubits, "--out")
    if circuit.mode is Mode.Z2:
        value = amplitude(compile_circuit(circuit, input_bits), output_bits, args.cap)
        print(f"{value} = {value.as_float():.12f}")
    else:
        value = cyclotomic_amplitude(circuit, input_bits, output_bits, args.cap)
        print(f"{value}, w = exp(i*pi/4)")
        print(f"= {_format_complex(value.as_complex())}")
    return 0


def _cmd_distribution(args: argparse.Namespace) -> int:
    circuit = _prepared(args)
    input_bits = _bits_arg(args.input, circuit.num_qubits, "--in")
    if circuit.mode is Mode.Z2:
        table = distribution(compile_circuit(circuit, input_bits), args.cap)
        for bits, value in table.items():
            print(f"{format_bits(bits)} {value} {value.as_float():.12f}")
    else:
        system = compile_mixed(circuit, input_bits)
        for bits in all_basis_strings(circuit.num_qubits):
            reduced = eliminate(system, bits)
            if reduced is None:
                continue
            value = amplitude_mixed(
                reduced.phase, reduced.free_vars, system.num_path_vars, args.cap
            )
            print(
                f"{format_bits(bits)} {value} {_format_complex(value.as_complex())}"
            )
    return 0


def _cmd_decision(args: argparse.Namespace) -> int:
    circuit = _read_circuit(args.circuit)
    print(render_circuit(decision_transform(circuit, args.answer)), end="")
    return 0


def _cmd_sign(args: argparse.Namespace) -> int:
    circuit = _read_circuit(args.circuit)
    print(render_circuit(sign_transform(circuit, args.answer)), end="")
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    circuit = _prepared(args)
    if circuit.mode is not Mode.Z2:
        raise ValueError("sample supports z2-mode circuits only")
    input_bits = _bits_arg(args.input, circuit.num_qubits, "--in")
    output_bits = _bits_arg(args.output, circuit.num_qubits, "--out")
    system = compile_circuit(circuit, input_bits)
    result = estimate_amplitude(system, output_bits, args.samples, args.seed)
    print(f"estimate = {result.estimate:.12f}")
    print(f"std_error = {result.std_error:.12f}")
    print(f"samples = {result.num_samples}  h = {result.h}  seed = {args.seed}")
    print(f"generator = {GENERATOR}")
    if system.num_path_vars <= args.cap:
        exact = amplitude(system, output_bits, args.cap)
        print(f"exact = {exact.as_float():.12f} ({exact})")
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    circuit = _prepared(args)
    input_bits = (0,) * circuit.num_qubits
    print(
        f"mode = {circuit.mode.value}  qubits = {circuit.num_qubits}  "
        f"gates = {len(circuit.gates)}"
    )
    if circuit.mode is Mode.Z2:
        system = compile_circuit(circuit, input_bits)
        print(f"h = {system.num_path_vars}")
        print(
            f"outputs: terms {[len(p) for p in system.outputs]} "
            f"degrees {[p.degree for p in system.outputs]}"
        )
        print(
            f"phase: terms {len(system.phase)} degree {system.phase.degree} "
            f"(2h = {2 * system.num_path_vars})"
        )
        try:
            path_count_check(system)
            print("normalized-form bounds: satisfied")
        except BoundViolationError as exc:
            print(f"normalized-form bounds: exceeded ({exc})")
    else:
        system = compile_mixed(circuit, input_bits)
        canonical = system.phase.canonicalize()
        print(f"h = {system.num_path_vars}")
        print(f"outputs: degrees {[p.degree for p in system.outputs]}")
        print(
            f"phase: raw terms {len(system.phase.terms)}, canonical terms "
            f"{len(canonical.terms)}, canonical degree {canonical.degree}"
        )
        if canonical.degree > 2:
            print("canonical degree exceeds 2: kept exactly, not truncated")
    return 0


def _draw_bits(rng: np.random.Generator, num_qubits: int) -> BasisString:
    return tuple(int(bit) for bit in rng.integers(0, 2, size=num_qubits))


def _verify_circuit(
    circuit: Circuit,
    pairs: Sequence[tuple[BasisString, BasisString]],
    cap: int,
    tol: float,
) -> tuple[float, list[str]]:
    worst = 0.0
    mismatches = []
    states: dict[BasisString, np.ndarray] = {}
    systems: dict[BasisString, object] = {}
    for a, b in pairs:
        if a not in states:
            states[a] = simulate(circuit, a)
        expected = complex(states[a][bits_to_index(b)])
        if circuit.mode is Mode.Z2:
            if a not in systems:
                systems[a] = compile_circuit(circuit, a)
            got = complex(amplitude(systems[a], b, cap).as_float())
        else:
            got = cyclotomic_amplitude(circuit, a, b, cap).as_complex()
        error = abs(got - expected)
        worst = max(worst, error)
        if error > tol:
            mismatches.append(
                f"mismatch: in={format_bits(a)} out={format_bits(b)} "
                f"path-sum={got} reference={expected} |error|={error:.3e}"
            )
    return worst, mismatches


def _cmd_verify(args: argparse.Namespace) -> int:
    rng = np.random.default_rng(args.seed)
    if args.circuit == "random":
        mode = Mode(args.mode)
        circuits = [
            random_circuit(
                args.n,
                args.gates,
                mode,
                rng,
                max_hadamards=min(args.cap, MAX_QUBITS),
            )
            for _ in range(args.trials)
        ]
    else:
        circuits = [_read_circuit(args.circuit)]
    worst = 0.0
    total_pairs = 0
    mismatches: list[str] = []
    for circuit in circuits:
        n = circuit.num_qubits
        if args.exhaustive:
            if 1 << (2 * n) > 4096:
                raise ValueError(
                    "--exhaustive is limited to circuits with at most 6 qubits"
                )
            pairs = [
                (a, b)
                for a in all_basis_strings(n)
                for b in all_basis_strings(n)
            ]
        else:
            pairs = [
                (_draw_bits(rng, n), _draw_bits(rng, n))
                for _ in range(args.pairs)
            ]
        circuit_worst, circuit_bad = _verify_circuit(circuit, pairs, args.cap, args.tol)
        worst = max(worst, circuit_worst)
        total_pairs += len(pairs)
        mismatches.extend(circuit_bad)
    for line in mismatches:
        print(line)
    print(
        f"verified {len(circuits)} circuit(s), {total_pairs} pair(s), "
        f"max |error| = {worst:.3e}"
    )
    if mismatches:
        return 2
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathsum",
        description=(
            "Exact quantum-circuit amplitudes by counting solutions of "
            "polynomial systems over Z2."
        ),
    )
    parser.add_argument("--version", action="version", version=f"pathsum {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = add("parse", _cmd_parse, "check a circuit file and print a summary")
    sub.add_argument("circuit", help="circuit file")
    sub.add_argument("--format", choices=("text", "json"), default="text")

    sub = add("compile", _cmd_compile, "compile to a polynomial path system")
    sub.add_argument("circuit", help="circuit file")
    sub.add_argument("--in", dest="input", required=True, help="input basis string")
    sub.add_argument("--normalize", action="store_true", help="insert H pairs after TOFFOLIs first (z2 mode)")
    sub.add_argument("--format", choices=("text", "json"), default="json")

    sub = add("amplitude", _cmd_amplitude, "exact transition amplitude <out|U|in>")
    sub.add_argument("circuit", help="circuit file")
    sub.add_argument("--in", dest="input", required=True, help="input basis string")
    sub.add_argument("--out", dest="output", required=True, help="output basis string")
    sub.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (log2)")
    sub.add_argument("--normalize", action="store_true")

    sub = add("distribution", _cmd_distribution, "exact amplitudes for every output")
    sub.add_argument("circuit", help="circuit file")
    sub.add_argument("--in", dest="input", required=True, help="input basis string")
    sub.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (log2)")
    sub.add_argument("--normalize", action="store_true")

    sub = add("decision", _cmd_decision, "emit the ancilla-copy decision circuit")
    sub.add_argument("circuit", help="circuit file")
    sub.add_argument("--answer", type=int, default=0, help="answer qubit (default 0)")

    sub = add("sign", _cmd_sign, "emit the (-1)^f diagonal-sign circuit")
    sub.add_argument("circuit", help="circuit file")
    sub.add_argument("--answer", type=int, default=0, help="answer qubit (default 0)")

    sub = add("verify", _cmd_verify, "cross-check path-sum amplitudes against the dense simulator")
    sub.add_argument("circuit", help="circuit file, or 'random'")
    sub.add_argument("--trials", type=int, default=20, help="random circuits to draw")
    sub.add_argument("--pairs", type=int, default=4, help="basis pairs per circuit")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--n", type=int, default=4, help="qubits for random circuits")
    sub.add_argument("--gates", type=int, default=20, help="gates per random circuit")
    sub.add_argument("--mode", choices=("z2", "mixed"), default="z2")
    sub.add_argument("--exhaustive", action="store_true", help="check all basis pairs")
    sub.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sub.add_argument("--tol", type=float, default=1e-10)

    sub = add("sample", _cmd_sample, "Monte Carlo amplitude estimate over uniform paths")
    sub.add_argument("circuit", help="circuit file")
    sub.add_argument("--in", dest="input", required=True, help="input basis string")
    sub.add_argument("--out", dest="output", required=True, help="output basis string")
    sub.add_argument("--samples", type=int, default=4096)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--cap", type=int, default=DEFAULT_CAP, help="print the exact value when h <= cap")
    sub.add_argument("--normalize", action="store_true")

    sub = add("stats", _cmd_stats, "compiled-system sizes and bound checks")
    sub.add_argument("circuit", help="circuit file")
    sub.add_argument("--normalize", action="store_true")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    if not hasattr(args, "handler"):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.handler(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
