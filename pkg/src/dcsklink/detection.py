"""Correlation receivers: segment correlations, branch metrics, decisions.

The receiver correlates the u-chip reference segment with each of the n
information segments (c_j = sum_k y_k y_{k+jU}).  Summing the c_j gives the
plain short-reference decision metric; weighting them by Walsh row m gives
branch metric Z_m.  Computing c once and applying the Walsh transform is
algebraically identical to n independent correlator passes but costs
O(nU + n^2) instead of O(n^2 U).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .walsh import WalshMatrix
from .waveform import FrameParams


@dataclass(frozen=True)
class BranchMetrics:
    """All n branch outputs z plus the raw segment correlations they mix."""

    z: np.ndarray
    segment_correlations: np.ndarray


@dataclass(frozen=True)
class Decision:
    """Destination decision: data symbol, index symbol, and the metrics used."""

    b_hat: int
    a_hat: int
    z_sd: float
    z_rd: float

    @property
    def z_egc(self) -> float:
        return 0.5 * (self.z_sd + self.z_rd)


def segment_correlations(y: np.ndarray, p: FrameParams) -> np.ndarray:
    """c_j = reference . segment_j for j = 1..n."""
    y = np.asarray(y, dtype=np.float64)
    if y.shape != (p.sf,):
        raise ValueError(f"expected {p.sf} received samples, got shape {y.shape}")
    seg = y.reshape(p.n + 1, p.u)
    return seg[1:] @ seg[0]


def segment_correlations_batch(y: np.ndarray, p: FrameParams) -> np.ndarray:
    """Vectorised segment correlations: (F, sf) -> (F, n)."""
    seg = y.reshape(y.shape[0], p.n + 1, p.u)
    return np.einsum("fu,fnu->fn", seg[:, 0, :], seg[:, 1:, :])


def correlate_srdcsk(y: np.ndarray, p: FrameParams) -> float:
    """Plain short-reference decision metric: sum of all segment correlations."""
    return float(segment_correlations(y, p).sum())


def branch_metrics(y: np.ndarray, w: WalshMatrix, p: FrameParams) -> BranchMetrics:
    """Z_m = sum_j w_{m,j} c_j for every branch m."""
    if w.order != p.n:
        raise ValueError(f"Walsh order {w.order} does not match frame n={p.n}")
    c = segment_correlations(y, p)
    z = w.rows.astype(np.float64) @ c
    return BranchMetrics(z=z, segment_correlations=c)


def detect_index(bm: BranchMetrics) -> int:
    """argmax_m |Z_m|, 1-based; exact ties break toward the smallest m."""
    return int(np.argmax(np.abs(bm.z))) + 1


def egc_decide(z_sd: float, z_rd: float) -> int:
    """Equal-gain combining sign decision; the zero boundary maps to -1."""
    return 1 if (z_sd + z_rd) / 2.0 > 0.0 else -1


def decide_relay_symbol(z_sr: float) -> int:
    """Relay's decode-and-forward sign decision; zero maps to -1."""
    return 1 if z_sr > 0.0 else -1


def decide_destination(z_sd: float, bm: BranchMetrics) -> Decision:
    """Index detection followed by EGC over the stored and matched metrics."""
    a_hat = detect_index(bm)
    z_rd = float(bm.z[a_hat - 1])
    return Decision(b_hat=egc_decide(z_sd, z_rd), a_hat=a_hat, z_sd=float(z_sd), z_rd=z_rd)
