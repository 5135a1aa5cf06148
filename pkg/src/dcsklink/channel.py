"""Link physics: path loss, multipath block fading, chip delays, AWGN.

A link applies y_k = sqrt(power / distance^alpha) * sum_l h_l e_{k - tau_l} + n_k
with one fading draw per frame (block fading), integer-chip delays, samples
before the frame start treated as zero, and n_k ~ Normal(0, noise_psd / 2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PathSpec:
    """One propagation path: fixed gain h, or Rayleigh with given E{h^2}."""

    kind: str  # "fixed" | "rayleigh"
    gain: float  # h itself for fixed paths, mean-square gain for rayleigh
    delay: int  # chips

    def __post_init__(self) -> None:
        if self.kind not in ("fixed", "rayleigh"):
            raise ValueError(f"unknown path kind {self.kind!r}")
        if self.gain <= 0:
            raise ValueError("path gain must be positive")
        if self.delay < 0:
            raise ValueError("path delay must be >= 0 chips")


@dataclass(frozen=True)
class LinkModel:
    """One directed link: transmit power, geometry, path set and noise level."""

    power: float
    distance: float
    path_loss_exp: float
    paths: tuple[PathSpec, ...]
    noise_psd: float

    def __post_init__(self) -> None:
        if self.power <= 0 or self.distance <= 0 or self.noise_psd <= 0:
            raise ValueError("power, distance and noise_psd must be positive")
        if not self.paths:
            raise ValueError("link needs at least one path")
        delays = [p.delay for p in self.paths]
        if delays[0] != 0:
            raise ValueError("first path delay must be 0")
        if any(b < a for a, b in zip(delays, delays[1:])):
            raise ValueError("path delays must be nondecreasing")

    @property
    def l_paths(self) -> int:
        return len(self.paths)

    @property
    def amplitude_scale(self) -> float:
        return float(np.sqrt(self.power / self.distance**self.path_loss_exp))

    @property
    def delays(self) -> np.ndarray:
        return np.array([p.delay for p in self.paths], dtype=np.int64)

    def mean_square_gains(self) -> np.ndarray:
        """E{h_l^2} per path (h^2 itself for fixed paths)."""
        return np.array(
            [p.gain**2 if p.kind == "fixed" else p.gain for p in self.paths],
            dtype=np.float64,
        )

    @classmethod
    def awgn(cls, power: float, distance: float, path_loss_exp: float, noise_psd: float) -> "LinkModel":
        """Single unit-gain zero-delay path: the AWGN reduction of the model."""
        return cls(power, distance, path_loss_exp, (PathSpec("fixed", 1.0, 0),), noise_psd)


@dataclass(frozen=True)
class ChannelRealization:
    """The per-frame fading draw: one gain per path, delays in chips."""

    gains: np.ndarray
    delays: np.ndarray

    def __post_init__(self) -> None:
        if len(self.gains) != len(self.delays):
            raise ValueError("gains and delays must have equal length")


def draw_realization(link: LinkModel, rng: np.random.Generator) -> ChannelRealization:
    """Draw one block-fading realization; fixed paths keep their constant h."""
    gains = draw_gain_matrix(link, rng, 1)[0]
    return ChannelRealization(gains=gains, delays=link.delays)


def draw_gain_matrix(link: LinkModel, rng: np.random.Generator, count: int) -> np.ndarray:
    """(count, L) gain draws; Rayleigh h = sqrt(g^2 + q^2) * sqrt(E{h^2}/2)."""
    gains = np.empty((count, link.l_paths), dtype=np.float64)
    for j, path in enumerate(link.paths):
        if path.kind == "fixed":
            gains[:, j] = path.gain
        else:
            g = rng.standard_normal(count)
            q = rng.standard_normal(count)
            gains[:, j] = np.sqrt(g * g + q * q) * np.sqrt(path.gain / 2.0)
    return gains


def propagate(
    frame: np.ndarray,
    link: LinkModel,
    real: ChannelRealization,
    rng: np.random.Generator,
) -> np.ndarray:
    """Received samples for one frame under the given realization."""
    y = propagate_batch(np.asarray(frame, dtype=np.float64)[None, :], link, real.gains[None, :], rng)
    return y[0]


def propagate_batch(
    frames: np.ndarray,
    link: LinkModel,
    gains: np.ndarray,
    rng: np.random.Generator,
) -> np.ndarray:
    """Vectorised propagate: frames (F, sf), gains (F, L) -> received (F, sf).

    Samples displaced before the frame start are zero (no previous-frame
    tail); a delay >= the frame length is rejected.
    """
    n_frames, sf = frames.shape
    delays = link.delays
    if np.any(delays >= sf):
        raise ValueError(f"path delay {int(delays.max())} >= frame length {sf}")
    signal = np.zeros_like(frames)
    for j, tau in enumerate(delays):
        tau = int(tau)
        if tau == 0:
            signal += gains[:, j : j + 1] * frames
        else:
            signal[:, tau:] += gains[:, j : j + 1] * frames[:, : sf - tau]
    signal *= link.amplitude_scale
    noise = rng.normal(0.0, np.sqrt(link.noise_psd / 2.0), size=(n_frames, sf))
    return signal + noise
