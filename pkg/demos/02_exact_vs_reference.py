"""Cross-checking the counting engine against dense simulation.

Draws random circuits in both gate-set modes, compares every path-sum
amplitude against the state-vector simulator, and checks the integer
unitarity identities that the exact representation makes available.
"""

from __future__ import annotations

import numpy as np

from pathsum import (
    Mode,
    all_basis_strings,
    amplitude,
    bits_to_index,
    compile_circuit,
    count_all,
    cyclotomic_amplitude,
    random_circuit,
    simulate,
)

rng = np.random.default_rng(2)

print("z2 mode: 40 random circuits, all basis pairs")
worst = 0.0
for _ in range(40):
    n = int(rng.integers(1, 5))
    circuit = random_circuit(n, int(rng.integers(0, 25)), Mode.Z2, rng, max_hadamards=12)
    for a in all_basis_strings(n):
        state = simulate(circuit, a)
        system = compile_circuit(circuit, a)
        for b in all_basis_strings(n):
            error = abs(amplitude(system, b).as_float() - state[bits_to_index(b)])
            worst = max(worst, error)
print(f"  max |path-sum - reference| = {worst:.3e}\n")

print("mixed mode: 40 random circuits, all basis pairs")
worst = 0.0
for _ in range(40):
    n = int(rng.integers(1, 4))
    circuit = random_circuit(n, int(rng.integers(0, 20)), Mode.MIXED, rng, max_hadamards=12)
    for a in all_basis_strings(n):
        state = simulate(circuit, a)
        for b in all_basis_strings(n):
            got = cyclotomic_amplitude(circuit, a, b).as_complex()
            worst = max(worst, abs(got - state[bits_to_index(b)]))
print(f"  max |path-sum - reference| = {worst:.3e}\n")

# The floating-point comparison above has tolerance; the counting form
# also satisfies exact integer identities, no epsilon anywhere:
circuit = random_circuit(4, 24, Mode.Z2, rng, max_hadamards=14)
system = compile_circuit(circuit, (0, 0, 0, 0))
table = count_all(system)
h = system.num_path_vars
paths = sum(pair.total for pair in table.values())
square = sum(pair.gap ** 2 for pair in table.values())
print(f"one random circuit with h = {h}:")
print(f"  sum_b (#(0) + #(1)) = {paths} = 2^{h}")
print(f"  sum_b (#(0) - #(1))^2 = {square} = 2^{h}  (exact unitarity)")
assert paths == square == 1 << h
