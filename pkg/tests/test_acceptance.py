"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with `pytest -v tests/test_acceptance.py` (add -s to see the lines
while passing; they always appear in failure reports).
"""

from __future__ import annotations

import math
import time

import numpy as np

from pathsum import (
    Circuit,
    Gate,
    GateKind,
    GF2Poly,
    MixedPhase,
    Mode,
    RealAmplitude,
    all_basis_strings,
    amplitude,
    bits_to_index,
    compile_circuit,
    compile_mixed,
    count_all,
    cyclotomic_amplitude,
    decision_transform,
    estimate_amplitude,
    normalize,
    parse_circuit,
    path_count_check,
    random_circuit,
    sign_transform,
    simulate,
)

from conftest import GOLDEN_PATH, random_bits


def _report(number: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"criterion {number} [{status}] {detail}")
    assert ok, f"criterion {number}: {detail}"


def var(i: int) -> GF2Poly:
    return GF2Poly.variable(i)


def test_criterion_1_golden_circuit_reproduction():
    started = time.perf_counter()
    circuit = parse_circuit(GOLDEN_PATH.read_text(encoding="utf-8"))
    ok = True
    for a in all_basis_strings(3):
        system = compile_circuit(circuit, a)
        expected_phase = (
            a[0] * var(1)
            + a[1] * var(2)
            + var(1) * var(3)
            + var(4) * (a[2] + var(1) * var(2))
        )
        ok &= system.num_path_vars == 4
        ok &= system.outputs == (var(3) + var(2) * var(4), var(2), var(4))
        ok &= system.phase == expected_phase
    value = amplitude(compile_circuit(circuit, (0, 0, 0)), (0, 0, 0))
    ok &= value == RealAmplitude(2, 4)
    ok &= value.as_float() == 0.5
    elapsed = time.perf_counter() - started
    ok &= elapsed < 1.0
    _report(1, ok, f"golden circuit: symbolic system at 8 inputs, amplitude 1/2, {elapsed:.3f}s")


def test_criterion_2_z2_oracle_equivalence():
    started = time.perf_counter()
    rng = np.random.default_rng(20260814)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(1, 7))
        circuit = random_circuit(
            n, int(rng.integers(0, 31)), Mode.Z2, rng, max_hadamards=16
        )
        states: dict = {}
        systems: dict = {}
        for _ in range(10):
            a = random_bits(rng, n)
            b = random_bits(rng, n)
            if a not in states:
                states[a] = simulate(circuit, a)
                systems[a] = compile_circuit(circuit, a)
            got = amplitude(systems[a], b).as_float()
            worst = max(worst, abs(got - states[a][bits_to_index(b)]))
    elapsed = time.perf_counter() - started
    ok = worst <= 1e-10 and elapsed < 60.0
    _report(2, ok, f"200 z2 circuits x 10 pairs: max |error| {worst:.2e}, {elapsed:.1f}s")


def test_criterion_3_mixed_oracle_equivalence():
    started = time.perf_counter()
    rng = np.random.default_rng(314159)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(1, 6))
        circuit = random_circuit(
            n, int(rng.integers(0, 26)), Mode.MIXED, rng, max_hadamards=14
        )
        states: dict = {}
        for _ in range(10):
            a = random_bits(rng, n)
            b = random_bits(rng, n)
            if a not in states:
                states[a] = simulate(circuit, a)
            got = cyclotomic_amplitude(circuit, a, b).as_complex()
            worst = max(worst, abs(got - states[a][bits_to_index(b)]))
    elapsed = time.perf_counter() - started
    ok = worst <= 1e-10 and elapsed < 60.0
    _report(3, ok, f"200 mixed circuits x 10 pairs: max |error| {worst:.2e}, {elapsed:.1f}s")


def test_criterion_4_exact_integer_unitarity():
    rng = np.random.default_rng(271828)
    ok = True
    for _ in range(50):
        n = int(rng.integers(1, 6))
        circuit = random_circuit(
            n, int(rng.integers(0, 31)), Mode.Z2, rng, max_hadamards=16
        )
        system = compile_circuit(circuit, random_bits(rng, n))
        table = count_all(system)
        h = system.num_path_vars
        ok &= sum(pair.total for pair in table.values()) == 1 << h
        ok &= sum(pair.gap ** 2 for pair in table.values()) == 1 << h
    for _ in range(50):
        n = int(rng.integers(1, 5))
        circuit = random_circuit(
            n, int(rng.integers(0, 21)), Mode.MIXED, rng, max_hadamards=10
        )
        a = random_bits(rng, n)
        h = compile_mixed(circuit, a).num_path_vars
        rational = radical = 0
        for b in all_basis_strings(n):
            part = cyclotomic_amplitude(circuit, a, b).mag_squared()
            rational += part[0]
            radical += part[1]
        ok &= (rational, radical) == (1 << h, 0)
    _report(4, ok, "50 z2 + 50 mixed circuits: integer unitarity sums exact")


def test_criterion_5_degree_and_term_bounds_after_normalize():
    rng = np.random.default_rng(161803)
    ok = True
    for _ in range(100):
        n = int(rng.integers(3, 7))
        circuit = random_circuit(
            n, int(rng.integers(0, 41)), Mode.Z2, rng,
            kinds=(GateKind.H, GateKind.TOFFOLI),
        )
        system = compile_circuit(normalize(circuit), random_bits(rng, n))
        report = path_count_check(system)  # raises on any violation
        ok &= max(report.output_degrees, default=0) <= 2
        ok &= max(report.output_terms, default=0) <= 2
        ok &= report.phase_degree <= 3
        ok &= report.phase_terms <= 2 * report.num_path_vars
    _report(5, ok, "100 normalized circuits: deg(B)<=2, terms(B)<=2, deg(phase)<=3, terms(phase)<=2h")


def test_criterion_6_decision_and_sign_transforms():
    and_oracle = Circuit(3, (Gate.toffoli(0, 1, 2),), Mode.Z2)
    cnot_copy = Circuit(2, (Gate.cnot(0, 1),), Mode.Z2)
    ok = True
    for oracle, answer, f in (
        (and_oracle, 2, lambda a: (a[0] & a[1]) ^ a[2]),
        (cnot_copy, 1, lambda a: a[0] ^ a[1]),
    ):
        decision = decision_transform(oracle, answer)
        sign = sign_transform(oracle, answer)
        for a in all_basis_strings(oracle.num_qubits):
            bit = f(a)
            hit = a + (bit,)
            miss = a + (1 - bit,)
            diag = a + (0,)
            ref_state = simulate(decision, a + (0,))
            ok &= abs(ref_state[bits_to_index(hit)] - 1) <= 1e-12
            ok &= abs(ref_state[bits_to_index(miss)]) <= 1e-12
            ok &= abs(simulate(sign, diag)[bits_to_index(diag)] - (-1) ** bit) <= 1e-12
            decision_system = compile_circuit(decision, a + (0,))
            ok &= abs(amplitude(decision_system, hit).as_float() - 1) <= 1e-12
            ok &= abs(amplitude(decision_system, miss).as_float()) <= 1e-12
            sign_system = compile_circuit(sign, diag)
            ok &= abs(amplitude(sign_system, diag).as_float() - (-1) ** bit) <= 1e-12
    _report(6, ok, "Toffoli-AND and CNOT-copy: decision/sign exact via refsim and path-sum")


def test_criterion_7_monte_carlo_error_growth():
    started = time.perf_counter()
    samples = 4096
    mean_errors = []
    for h in (4, 8, 12):
        width = h // 2
        gates = tuple(g for q in range(width) for g in (Gate.h(q), Gate.h(q)))
        circuit = Circuit(width, gates, Mode.Z2)
        system = compile_circuit(circuit, (0,) * width)
        errors = [
            estimate_amplitude(system, (0,) * width, samples, seed).std_error
            for seed in range(20)
        ]
        mean_errors.append(float(np.mean(errors)))
    first = mean_errors[1] / mean_errors[0]
    second = mean_errors[2] / mean_errors[1]
    elapsed = time.perf_counter() - started
    ok = 1.5 <= first <= 2.5 and 1.5 <= second <= 2.5 and elapsed < 60.0
    _report(
        7,
        ok,
        f"std_error at M=4096 for h=4,8,12: ratios {first:.2f}, {second:.2f} "
        f"(target 2 +- 0.5), {elapsed:.1f}s",
    )


def test_criterion_8_canonicalization_and_hth():
    rng = np.random.default_rng(577215)
    ok = True
    for _ in range(500):
        n = int(rng.integers(1, 13))
        terms = tuple(
            (
                int(rng.integers(0, 8)),
                GF2Poly(int(m) for m in rng.integers(0, 1 << n, size=rng.integers(1, 5))),
            )
            for _ in range(int(rng.integers(0, 5)))
        )
        phase = MixedPhase(terms)
        points = np.arange(1 << n, dtype=np.uint64)
        ok &= bool(
            np.array_equal(phase.values(points), phase.canonicalize().values(points))
        )
    hth = parse_circuit("mode mixed\nqubits 1\nh 0\nt 0\nh 0\n")
    value = cyclotomic_amplitude(hth, (0,), (0,)).as_complex()
    ok &= abs(value.real - 0.853553391) <= 1e-9
    ok &= abs(value.imag - 0.353553391) <= 1e-9
    expected = (1 + complex(math.cos(math.pi / 4), math.sin(math.pi / 4))) / 2
    ok &= abs(value - expected) <= 1e-12
    _report(8, ok, "500 canonicalize round-trips exact; HTH amplitude (1 + w)/2")
