"""Monte Carlo estimation of path-sum amplitudes, and why it fails.

Each sample draws one assignment x uniformly from the 2^h paths and
scores sqrt(2^h) * [B(x) = b] * (-1)^phase(x), whose mean over x is the
amplitude. The estimator is unbiased but its per-sample variance grows
like 2^h for amplitudes of order one, so the standard error at fixed
sample count doubles roughly every four Hadamards: an exponential wall
that the exact counting kernel does not hit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .compile_z2 import PathSystem

__all__ = ["GENERATOR", "SampleEstimate", "estimate_amplitude"]

GENERATOR = "numpy.random.default_rng (PCG64)"


@dataclass(frozen=True)
class SampleEstimate:
    """Sample mean, its standard error, and the run parameters."""

    estimate: float
    std_error: float
    num_samples: int
    h: int


def estimate_amplitude(
    system: PathSystem,
    output_bits: Sequence[int],
    num_samples: int,
    seed: int,
) -> SampleEstimate:
    """Unbiased amplitude estimate from num_samples uniform path draws.

    Fully determined by the seed. std_error is the sample standard
    deviation (ddof=1) divided by sqrt(num_samples).
    """
    if num_samples < 2:
        raise ValueError("need at least two samples for a standard error")
    if len(output_bits) != system.num_qubits:
        raise ValueError("output length must match the qubit count")
    b = tuple(bit & 1 for bit in output_bits)
    h = system.num_path_vars
    rng = np.random.default_rng(seed)
    # Path variables are 1-based, so assignment bits live at positions 1..h.
    draws = rng.integers(0, 1 << h, size=num_samples, dtype=np.uint64) << np.uint64(1)
    selected = np.ones(num_samples, dtype=bool)
    for poly, bit in zip(system.outputs, b):
        selected &= poly.values(draws) == bool(bit)
    signs = np.where(system.phase.values(draws), -1.0, 1.0)
    scores = np.where(selected, math.sqrt(2.0 ** h) * signs, 0.0)
    estimate = float(scores.mean())
    std_error = float(scores.std(ddof=1) / math.sqrt(num_samples))
    return SampleEstimate(estimate, std_error, num_samples, h)
