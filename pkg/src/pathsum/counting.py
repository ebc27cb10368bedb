"""Exact amplitudes for Z2-mode systems by counting solutions.

For a compiled system with h path variables, the transition amplitude
to output b is (#(0) - #(1)) / sqrt(2^h) where #(k) counts the
assignments x with B(x) = b and phase(x) = k. Counting enumerates all
2^h assignments with vectorized truth tables, processed in fixed-size
blocks so memory stays bounded; blocks can run on a thread pool sized
by the PATHSUM_THREADS environment variable.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .circuit import BasisString, index_to_bits
from .compile_z2 import PathSystem

__all__ = [
    "DEFAULT_CAP",
    "CapExceededError",
    "CountPair",
    "RealAmplitude",
    "count",
    "count_all",
    "amplitude",
    "distribution",
]

DEFAULT_CAP = 30

_BLOCK_BITS = 20
_MAX_OUTPUT_QUBITS = 24


class CapExceededError(RuntimeError):
    """Enumeration would exceed the configured cap."""


def _check_cap(h: int, cap: int) -> None:
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if h > cap:
        raise CapExceededError(
            f"enumeration over 2^{h} assignments exceeds the cap of 2^{cap}; "
            "raise --cap or fall back to montecarlo sampling"
        )


def _worker_count() -> int:
    raw = os.environ.get("PATHSUM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _blocks(h: int) -> Iterator[tuple[int, int]]:
    total = 1 << h
    step = 1 << min(h, _BLOCK_BITS)
    for start in range(0, total, step):
        yield start, min(start + step, total)


def _run_blocks(h: int, work):
    """Map work(start, stop) over enumeration blocks, threaded if configured."""
    spans = list(_blocks(h))
    workers = _worker_count()
    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda span: work(*span), spans))
    return [work(start, stop) for start, stop in spans]


def _points(start: int, stop: int) -> np.ndarray:
    # Path variables are 1-based, so assignment bits live at positions 1..h.
    return np.arange(start, stop, dtype=np.uint64) << np.uint64(1)


@dataclass(frozen=True)
class CountPair:
    """Solution counts of B(x) = b split by phase parity, with h recorded."""

    count0: int
    count1: int
    h: int

    @property
    def gap(self) -> int:
        return self.count0 - self.count1

    @property
    def total(self) -> int:
        return self.count0 + self.count1


@dataclass(frozen=True)
class RealAmplitude:
    """Exact amplitude gap / sqrt(2^half_power) with integer numerator."""

    gap: int
    half_power: int

    def as_float(self) -> float:
        return self.gap / math.sqrt(2.0 ** self.half_power)

    def __str__(self) -> str:
        return f"{self.gap}/2^({self.half_power}/2)"


def _validate_output(system: PathSystem, output_bits: Sequence[int]) -> tuple[int, ...]:
    if len(output_bits) != system.num_qubits:
        raise ValueError("output length must match the qubit count")
    return tuple(b & 1 for b in output_bits)


def count(system: PathSystem, output_bits: Sequence[int], cap: int = DEFAULT_CAP) -> CountPair:
    """Count solutions of B(x) = b with phase 0 and with phase 1."""
    b = _validate_output(system, output_bits)
    h = system.num_path_vars
    _check_cap(h, cap)

    def work(start: int, stop: int) -> tuple[int, int]:
        points = _points(start, stop)
        selected = np.ones(points.shape, dtype=bool)
        for poly, bit in zip(system.outputs, b):
            selected &= poly.values(points) == bool(bit)
        phase = system.phase.values(points)
        c1 = int(np.count_nonzero(selected & phase))
        c0 = int(np.count_nonzero(selected)) - c1
        return c0, c1

    pairs = _run_blocks(h, work)
    return CountPair(sum(p[0] for p in pairs), sum(p[1] for p in pairs), h)


def count_all(system: PathSystem, cap: int = DEFAULT_CAP) -> dict[BasisString, CountPair]:
    """Count pairs for every output basis string in a single sweep."""
    h = system.num_path_vars
    _check_cap(h, cap)
    n = system.num_qubits
    if n > _MAX_OUTPUT_QUBITS:
        raise CapExceededError(
            f"full distribution over {n} qubits exceeds the {_MAX_OUTPUT_QUBITS}-qubit cap"
        )

    def work(start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
        points = _points(start, stop)
        index = np.zeros(points.shape, dtype=np.uint32)
        for j, poly in enumerate(system.outputs):
            index |= poly.values(points).astype(np.uint32) << np.uint32(j)
        phase = system.phase.values(points)
        size = 1 << n
        zeros = np.bincount(index[~phase], minlength=size)
        ones = np.bincount(index[phase], minlength=size)
        return zeros, ones

    results = _run_blocks(h, work)
    zeros = sum(r[0] for r in results)
    ones = sum(r[1] for r in results)
    return {
        index_to_bits(i, n): CountPair(int(zeros[i]), int(ones[i]), h)
        for i in range(1 << n)
    }


def amplitude(system: PathSystem, output_bits: Sequence[int], cap: int = DEFAULT_CAP) -> RealAmplitude:
    """Exact transition amplitude to one output basis string."""
    pair = count(system, output_bits, cap)
    return RealAmplitude(pair.gap, pair.h)


def distribution(system: PathSystem, cap: int = DEFAULT_CAP) -> dict[BasisString, RealAmplitude]:
    """Exact amplitudes for every reachable output basis string.

    Outputs with no admissible path at all are omitted; a reachable
    output whose counts cancel still appears, with gap 0.
    """
    return {
        bits: RealAmplitude(pair.gap, pair.h)
        for bits, pair in count_all(system, cap).items()
        if pair.total > 0
    }
