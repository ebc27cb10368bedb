"""Exact Clifford+T amplitudes in the eighth-root-of-unity ring.

Mixed-mode circuits keep affine output constraints, so Gaussian
elimination replaces brute-force filtering; the remaining free
variables are enumerated and each contributes omega^phase with
omega = exp(i*pi/4). The result is exact: four integers over a power
of sqrt(2).
"""

from __future__ import annotations

from pathsum import (
    all_basis_strings,
    amplitude_mixed,
    compile_mixed,
    cyclotomic_amplitude,
    eliminate,
    format_bits,
    parse_circuit,
)

circuit = parse_circuit("""
mode mixed
qubits 2
h 0
t 0
cx 0 1
t 1
h 1
""")

system = compile_mixed(circuit, (0, 0))
print("compiled at input 00:")
for j, poly in enumerate(system.outputs):
    print(f"  B_{j}(x) = {poly}")
print(f"  phase(x) = {system.phase}")
print(f"  h = {system.num_path_vars}\n")

print("per-output elimination and exact amplitude:")
for b in all_basis_strings(2):
    reduced = eliminate(system, b)
    if reduced is None:
        print(f"  b = {format_bits(b)}: constraints inconsistent, amplitude 0")
        continue
    value = amplitude_mixed(reduced.phase, reduced.free_vars, system.num_path_vars)
    print(f"  b = {format_bits(b)}: free vars {reduced.free_vars}, "
          f"reduced phase {reduced.phase}")
    print(f"        amplitude = {value} = {value.as_complex():.6f}")

# canonical form: XOR indicators expand into distinct monomials mod 8
canonical = system.phase.canonicalize()
print(f"\ncanonical phase: {canonical}")
print(f"canonical degree = {canonical.degree} "
      f"(T on an XOR of 3+ wires is what pushes this to 3)")

# exact unitarity in Z[sqrt(2)]: |amplitude|^2 sums to 2^h / 2^h = 1
rational = radical = 0
for b in all_basis_strings(2):
    part = cyclotomic_amplitude(circuit, (0, 0), b).mag_squared()
    rational += part[0]
    radical += part[1]
print(f"\nsum_b |numerator|^2 = {rational} + {radical}*sqrt(2) "
      f"= 2^{system.num_path_vars} exactly")
