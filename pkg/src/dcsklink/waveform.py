"""Baseband frame assembly for the source and relay transmitters.

A frame is a u-chip chaotic reference followed by n modulated copies of it:
the source scales every copy by the data symbol b, the relay additionally
signs copy j by entry j of the selected Walsh row.  One sample per chip; no
pulse shaping.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chaos import ChaoticSequence
from .walsh import WalshMatrix

# A baseband frame is a plain float vector of length (n + 1) * u.
BasebandFrame = np.ndarray


def _is_power_of_two(value: int) -> bool:
    return value > 0 and (value & (value - 1)) == 0


@dataclass(frozen=True)
class FrameParams:
    """Frame geometry: u reference chips, n replicas (Walsh order 2^m_c).

    beta = n*u information chips, sf = (n+1)*u total chips.  n = 1 is the
    conventional-DCSK degenerate case (no index bits).
    """

    u: int
    n: int
    chip_time: float = 1.0

    def __post_init__(self) -> None:
        if self.u < 1:
            raise ValueError("reference length u must be >= 1")
        if not _is_power_of_two(self.n):
            raise ValueError(f"replica count n must be a power of two, got {self.n}")
        if self.chip_time <= 0:
            raise ValueError("chip_time must be positive")

    @property
    def beta(self) -> int:
        return self.n * self.u

    @property
    def sf(self) -> int:
        return self.u + self.beta

    @property
    def m_c(self) -> int:
        return self.n.bit_length() - 1

    @classmethod
    def from_spreading_factor(cls, sf: int, m_c: int, chip_time: float = 1.0) -> "FrameParams":
        """Choose u from a target spreading factor; sf must divide as (n+1)*u."""
        n = 1 << m_c
        if sf % (n + 1) != 0:
            raise ValueError(f"sf={sf} is not divisible by n+1={n + 1}")
        return cls(u=sf // (n + 1), n=n, chip_time=chip_time)


@dataclass(frozen=True)
class MessageSymbols:
    """One stream's payload: data symbol b in {+1,-1}, index symbol a in 1..n."""

    b: int
    a: int = 1

    def __post_init__(self) -> None:
        if self.b not in (1, -1):
            raise ValueError(f"modulated symbol must be +-1, got {self.b}")
        if self.a < 1:
            raise ValueError(f"index symbol must be >= 1, got {self.a}")


def encode_source(b: int, x: ChaoticSequence, p: FrameParams) -> BasebandFrame:
    """[x | b*x | ... | b*x]: reference plus n identically modulated copies."""
    if b not in (1, -1):
        raise ValueError(f"modulated symbol must be +-1, got {b}")
    if x.u != p.u:
        raise ValueError(f"reference length {x.u} does not match frame u={p.u}")
    frame = np.empty(p.sf, dtype=np.float64)
    frame[: p.u] = x.samples
    frame[p.u :] = b * np.tile(x.samples, p.n)
    return frame


def encode_relay(m: MessageSymbols, x: ChaoticSequence, w: WalshMatrix, p: FrameParams) -> BasebandFrame:
    """[x | b*w_{a,1}*x | ... | b*w_{a,n}*x]: Walsh row a signs the copies."""
    if w.order != p.n:
        raise ValueError(f"Walsh order {w.order} does not match frame n={p.n}")
    if x.u != p.u:
        raise ValueError(f"reference length {x.u} does not match frame u={p.u}")
    if not 1 <= m.a <= p.n:
        raise ValueError(f"index symbol {m.a} outside 1..{p.n}")
    frame = np.empty(p.sf, dtype=np.float64)
    frame[: p.u] = x.samples
    frame[p.u :] = m.b * np.kron(w.row(m.a).astype(np.float64), x.samples)
    return frame
