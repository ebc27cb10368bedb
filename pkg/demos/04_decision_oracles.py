"""Reading classical predicates off single amplitudes.

A reversible circuit computing f can be wrapped so that one matrix
element answers "is f(a) = 1?": the decision form copies the answer
onto a fresh ancilla and uncomputes, the sign form returns the
diagonal amplitude (-1)^f(a). Both wrappers stay inside the balanced
gate set, so the path-sum engine evaluates them by pure counting.
"""

from __future__ import annotations

from pathsum import (
    Circuit,
    Gate,
    Mode,
    all_basis_strings,
    amplitude,
    compile_circuit,
    decision_transform,
    format_bits,
    render_circuit,
    sign_transform,
)

oracle = Circuit(3, (Gate.toffoli(0, 1, 2),), Mode.Z2)
print("oracle: one Toffoli, answer qubit 2 computes f(a) = a0 AND a1 (xor a2)\n")

decision = decision_transform(oracle, answer_qubit=2)
sign = sign_transform(oracle, answer_qubit=2)
print("sign-transformed circuit:")
print(render_circuit(sign))

print("truth table recovered from path-sum amplitudes alone:")
print("  a    <a,f|D|a,0>  <a,1-f|D|a,0>  <a,0|S|a,0>")
for a in all_basis_strings(3):
    f = (a[0] & a[1]) ^ a[2]
    decision_system = compile_circuit(decision, a + (0,))
    hit = amplitude(decision_system, a + (f,)).as_float()
    miss = amplitude(decision_system, a + (1 - f,)).as_float()
    diagonal = amplitude(compile_circuit(sign, a + (0,)), a + (0,)).as_float()
    print(f"  {format_bits(a)}  {hit:+11.1f}  {miss:+13.1f}  {diagonal:+11.1f}")
    assert hit == 1.0 and miss == 0.0 and diagonal == (-1.0) ** f

print("\nthe diagonal amplitude of the sign form is exactly (-1)^f(a):")
print("deciding f reduces to computing one path-sum gap, i.e. to counting")
print("solutions of a polynomial system over Z2 with phase parity split.")
