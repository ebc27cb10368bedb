"""Dense state-vector simulator used as an independent cross-check.

Applies gates by in-place updates on axis views of the state tensor, so
no 2^N x 2^N matrices are ever formed. Qubit q corresponds to tensor
axis N-1-q, keeping qubit 0 the least significant bit of the flat index.
"""

from __future__ import annotations

import math

import numpy as np

from .circuit import (
    BasisString,
    Circuit,
    GateKind,
    bits_to_index,
)

__all__ = ["MAX_QUBITS", "simulate", "amplitude_ref"]

MAX_QUBITS = 20

_INV_SQRT2 = 1.0 / math.sqrt(2.0)
_OMEGA = complex(math.cos(math.pi / 4), math.sin(math.pi / 4))


def simulate(circuit: Circuit, input_bits: BasisString) -> np.ndarray:
    """Final state vector for a basis-state input, as a complex128 array."""
    n = circuit.num_qubits
    if n > MAX_QUBITS:
        raise ValueError(f"reference simulator is limited to {MAX_QUBITS} qubits")
    if len(input_bits) != n:
        raise ValueError("input length must match the qubit count")
    state = np.zeros(1 << n, dtype=np.complex128)
    state[bits_to_index(input_bits)] = 1.0
    psi = state.reshape((2,) * n)
    for gate in circuit.gates:
        axes = tuple(n - 1 - q for q in gate.qubits)
        if gate.kind is GateKind.H:
            view = np.moveaxis(psi, axes[0], 0)
            lo = (view[0] + view[1]) * _INV_SQRT2
            hi = (view[0] - view[1]) * _INV_SQRT2
            view[0] = lo
            view[1] = hi
        elif gate.kind is GateKind.X:
            view = np.moveaxis(psi, axes[0], 0)
            tmp = view[0].copy()
            view[0] = view[1]
            view[1] = tmp
        elif gate.kind is GateKind.P:
            view = np.moveaxis(psi, axes[0], 0)
            view[1] = view[1] * _OMEGA ** gate.power
        elif gate.kind is GateKind.CNOT:
            view = np.moveaxis(psi, axes, (0, 1))
            tmp = view[1, 0].copy()
            view[1, 0] = view[1, 1]
            view[1, 1] = tmp
        else:  # TOFFOLI
            view = np.moveaxis(psi, axes, (0, 1, 2))
            tmp = view[1, 1, 0].copy()
            view[1, 1, 0] = view[1, 1, 1]
            view[1, 1, 1] = tmp
    return state


def amplitude_ref(circuit: Circuit, input_bits: BasisString, output_bits: BasisString) -> complex:
    """Transition amplitude <output|circuit|input> by dense simulation."""
    if len(output_bits) != circuit.num_qubits:
        raise ValueError("output length must match the qubit count")
    return complex(simulate(circuit, input_bits)[bits_to_index(output_bits)])
