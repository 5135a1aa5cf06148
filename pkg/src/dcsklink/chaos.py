"""Chaotic reference sequences from the second-order Chebyshev map x -> 1 - 2x^2.

The map is conjugate to the logistic map at full chaos; its invariant density
is the arcsine law on [-1, 1], so long orbits have zero mean and mean power
1/2.  Every spreading waveform in this package is built from these sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Fixed points of 1 - 2x^2 = x.  0, +-1 and -0.5 land on a fixed point after
# at most two iterations, so all of them make unusable reference orbits.
FIXED_POINTS = (0.5, -1.0)
DEGENERATE_SEEDS = (0.0, 1.0, -1.0, 0.5, -0.5)

_FIXED_TOL = 1e-12
_PROBE_ITERATES = 32


class DegenerateSeedError(ValueError):
    """Seed sits on (or collapses onto) a fixed point of the map."""


@dataclass(frozen=True)
class ChaoticSequence:
    """A u-sample chaotic reference segment with samples in [-1, 1]."""

    samples: np.ndarray
    u: int

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=np.float64)
        object.__setattr__(self, "samples", samples)
        if samples.ndim != 1 or samples.size != self.u:
            raise ValueError(f"expected {self.u} samples, got shape {samples.shape}")
        if self.u < 1:
            raise ValueError("reference length must be >= 1")
        if np.any(np.abs(samples) > 1.0):
            raise ValueError("chaotic samples must lie in [-1, 1]")

    @property
    def energy(self) -> float:
        return float(np.dot(self.samples, self.samples))


def chebyshev_next(x):
    """One iterate of the map; accepts scalars or arrays in [-1, 1]."""
    x = np.asarray(x, dtype=np.float64)
    if np.any(np.abs(x) > 1.0):
        raise ValueError("chebyshev map argument must satisfy |x| <= 1")
    out = 1.0 - 2.0 * x * x
    return float(out) if out.ndim == 0 else out


def is_degenerate_seed(seed: float) -> bool:
    """True if the orbit from ``seed`` collapses onto a fixed point.

    Checks the explicit degenerate set and then probes the first 32 iterates
    for a fixed point within 1e-12.
    """
    if abs(seed) > 1.0:
        return True
    if any(abs(seed - s) < _FIXED_TOL for s in DEGENERATE_SEEDS):
        return True
    x = seed
    for _ in range(_PROBE_ITERATES):
        x = 1.0 - 2.0 * x * x
        if any(abs(x - f) < _FIXED_TOL for f in FIXED_POINTS):
            return True
    return False


def generate_sequence(seed: float, u: int) -> ChaoticSequence:
    """Iterate the map ``u`` times from ``seed``; the seed itself is not emitted."""
    if u < 1:
        raise ValueError("sequence length must be >= 1")
    if not -1.0 < seed < 1.0:
        raise ValueError("seed must lie in (-1, 1)")
    if is_degenerate_seed(seed):
        raise DegenerateSeedError(f"seed {seed!r} collapses onto a fixed point of the map")
    samples = np.empty(u, dtype=np.float64)
    x = seed
    for k in range(u):
        x = 1.0 - 2.0 * x * x
        samples[k] = x
    return ChaoticSequence(samples=samples, u=u)


def random_seeds(rng: np.random.Generator, count: int) -> np.ndarray:
    """Draw ``count`` uniform (-1, 1) seeds, rejecting degenerate orbits.

    Rejection is vectorised over the batch; for uniform draws a rejection is a
    probability-zero event, but the check keeps the seed contract explicit.
    """
    seeds = rng.uniform(-1.0, 1.0, size=count)
    bad = _degenerate_mask(seeds)
    while np.any(bad):
        seeds[bad] = rng.uniform(-1.0, 1.0, size=int(bad.sum()))
        bad = _degenerate_mask(seeds)
    return seeds


def sequence_matrix(seeds: np.ndarray, u: int) -> np.ndarray:
    """Vectorised generate_sequence: one row of ``u`` iterates per seed."""
    seeds = np.asarray(seeds, dtype=np.float64)
    out = np.empty((seeds.size, u), dtype=np.float64)
    x = seeds.copy()
    for k in range(u):
        x = 1.0 - 2.0 * x * x
        out[:, k] = x
    return out


def _degenerate_mask(seeds: np.ndarray) -> np.ndarray:
    mask = np.zeros(seeds.shape, dtype=bool)
    for s in DEGENERATE_SEEDS:
        mask |= np.abs(seeds - s) < _FIXED_TOL
    x = seeds.copy()
    for _ in range(_PROBE_ITERATES):
        x = 1.0 - 2.0 * x * x
        for f in FIXED_POINTS:
            mask |= np.abs(x - f) < _FIXED_TOL
    return mask
