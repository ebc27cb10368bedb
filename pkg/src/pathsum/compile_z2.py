"""Compile Z2-mode circuits into polynomial path systems.

Each qubit line carries a wire polynomial over Z2, starting at the
constant input bit. X adds 1, CNOT adds the control wire, TOFFOLI adds
the product of its control wires. H allocates the next path variable
x_j (numbered 1, 2, ... in gate order), adds the term w * x_j to the
phase polynomial where w is the wire being replaced, and resets the
wire to x_j. After the sweep the wire polynomials are the output system
B and the transition amplitude is determined by counting solutions of
B(x) = b split by phase parity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .circuit import (
    BasisString,
    Circuit,
    Gate,
    GateKind,
    Mode,
    format_bits,
    parse_bits,
)
from .gf2poly import GF2Poly, parse_poly

__all__ = [
    "PathSystem",
    "BoundReport",
    "BoundViolationError",
    "compile_circuit",
    "normalize",
    "path_count_check",
]


@dataclass(frozen=True)
class PathSystem:
    """Output of the Z2 compiler.

    ``outputs[j]`` is the polynomial B_j for qubit j, ``phase`` is the
    Z2 phase polynomial, and both are over path variables x_1 .. x_h
    where ``num_path_vars`` = h = number of Hadamards. ``input_bits``
    records the basis input the system was compiled at.
    """

    num_path_vars: int
    outputs: tuple[GF2Poly, ...]
    phase: GF2Poly
    input_bits: BasisString

    @property
    def num_qubits(self) -> int:
        return len(self.outputs)

    def to_dict(self) -> dict:
        """Machine-readable form with polynomials in rendered text."""
        return {
            "h": self.num_path_vars,
            "input": format_bits(self.input_bits),
            "outputs": [str(p) for p in self.outputs],
            "phase": str(self.phase),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> PathSystem:
        return cls(
            num_path_vars=int(doc["h"]),
            outputs=tuple(parse_poly(text) for text in doc["outputs"]),
            phase=parse_poly(doc["phase"]),
            input_bits=parse_bits(doc["input"]),
        )

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def compile_circuit(circuit: Circuit, input_bits: Sequence[int]) -> PathSystem:
    """Compile a Z2-mode circuit at a basis input into a PathSystem.

    Pure: identical inputs produce identical systems, including the
    path-variable numbering.
    """
    if circuit.mode is not Mode.Z2:
        raise ValueError("compile_circuit handles z2-mode circuits only")
    if len(input_bits) != circuit.num_qubits:
        raise ValueError("input length must match the qubit count")
    a = tuple(b & 1 for b in input_bits)
    wires = [GF2Poly.constant(bit) for bit in a]
    phase = GF2Poly.zero()
    h = 0
    for gate in circuit.gates:
        if gate.kind is GateKind.X:
            (target,) = gate.qubits
            wires[target] = wires[target] + GF2Poly.one()
        elif gate.kind is GateKind.CNOT:
            control, target = gate.qubits
            wires[target] = wires[target] + wires[control]
        elif gate.kind is GateKind.TOFFOLI:
            c1, c2, target = gate.qubits
            wires[target] = wires[target] + wires[c1] * wires[c2]
        elif gate.kind is GateKind.H:
            (target,) = gate.qubits
            h += 1
            fresh = GF2Poly.variable(h)
            phase = phase + wires[target] * fresh
            wires[target] = fresh
        else:
            raise ValueError(f"gate {gate.kind.value} is not a z2-mode gate")
    return PathSystem(h, tuple(wires), phase, a)


def normalize(circuit: Circuit) -> Circuit:
    """Insert H pairs so every TOFFOLI target is refreshed before reuse.

    After each TOFFOLI whose target line is next touched by anything
    other than an H on that line (or never touched again), an H, H pair
    is appended on the target. The circuit's unitary is unchanged; the
    compiled system then satisfies the path_count_check bounds for
    circuits built from H and TOFFOLI. Idempotent.
    """
    if circuit.mode is not Mode.Z2:
        raise ValueError("normalize handles z2-mode circuits only")
    gates: list[Gate] = []
    originals = circuit.gates
    for i, gate in enumerate(originals):
        gates.append(gate)
        if gate.kind is not GateKind.TOFFOLI:
            continue
        target = gate.qubits[2]
        follower = next(
            (g for g in originals[i + 1 :] if target in g.qubits), None
        )
        if follower is None or follower.kind is not GateKind.H or follower.qubits != (target,):
            gates.append(Gate.h(target))
            gates.append(Gate.h(target))
    return Circuit(circuit.num_qubits, tuple(gates), circuit.mode)


@dataclass(frozen=True)
class BoundReport:
    """Measured sizes of a compiled system, as checked by path_count_check."""

    num_path_vars: int
    output_terms: tuple[int, ...]
    output_degrees: tuple[int, ...]
    phase_terms: int
    phase_degree: int


class BoundViolationError(RuntimeError):
    """A compiled system exceeded the normalized-form size bounds."""


def path_count_check(system: PathSystem) -> BoundReport:
    """Assert the size bounds guaranteed for normalized H/TOFFOLI circuits.

    Checks deg(B_j) <= 2, terms(B_j) <= 2, deg(phase) <= 3 and
    terms(phase) <= 2h. The degree bounds hold for any normalized
    z2-mode circuit; the term bounds additionally require the gate list
    to contain only H and TOFFOLI, since chains of X/CNOT can grow
    wire polynomials term by term. Returns the measured sizes.
    """
    report = BoundReport(
        num_path_vars=system.num_path_vars,
        output_terms=tuple(len(p) for p in system.outputs),
        output_degrees=tuple(p.degree for p in system.outputs),
        phase_terms=len(system.phase),
        phase_degree=system.phase.degree,
    )
    problems = []
    for j, poly in enumerate(system.outputs):
        if poly.degree > 2:
            problems.append(f"deg(B_{j}) = {poly.degree} > 2")
        if len(poly) > 2:
            problems.append(f"terms(B_{j}) = {len(poly)} > 2")
    if system.phase.degree > 3:
        problems.append(f"deg(phase) = {system.phase.degree} > 3")
    if len(system.phase) > 2 * system.num_path_vars:
        problems.append(
            f"terms(phase) = {len(system.phase)} > 2h = {2 * system.num_path_vars}"
        )
    if problems:
        raise BoundViolationError("; ".join(problems))
    return report
