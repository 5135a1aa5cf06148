"""End-to-end cooperative link simulation and Monte-Carlo BER estimation.

Systems
-------
``cim-sr-dcsk-cc``
    Two slots.  Slot 1: the source broadcasts the data symbol b on a
    short-reference frame; the relay decodes it, the destination stores its
    correlation metric.  Slot 2: the relay re-encodes its decision together
    with its own index symbol a on a fresh chaotic reference, signing the
    frame copies with Walsh row a; the destination detects the index from the
    branch metrics and combines the matched branch with the stored metric
    (equal-gain) to decide b.  The relay always forwards its decision (no
    error detection), so decode errors propagate.

``sr-dcsk-cc`` / ``dcsk-cc``
    Three-slot baselines: slots 1-2 carry the source bit exactly as above but
    with the relay's Walsh row fixed to all-ones (plain forwarding), slot 3
    carries one relay-own bit as a plain frame.  ``dcsk-cc`` uses conventional
    DCSK frames sized to the shared spreading factor (reference sf/2 followed
    by one modulated copy).

Bookkeeping: the "index" error class counts the relay-side payload bits
(m_c Walsh index bits for the proposed system, the single slot-3 bit for the
baselines); the "modulated" class counts the source bit.

Monte-Carlo determinism: frames are simulated in fixed-size batches, batch b
of grid point i is seeded by SeedSequence(seed, spawn_key=(i, b)), and results
are folded in batch order with the stopping rule applied to the cumulative
sequence.  Worker processes only evaluate batches speculatively, so counters
are identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import chaos
from .channel import LinkModel, PathSpec, draw_gain_matrix, propagate_batch
from .detection import segment_correlations_batch
from .walsh import walsh_matrix
from .waveform import FrameParams, MessageSymbols

SYSTEM_KINDS = ("cim-sr-dcsk-cc", "sr-dcsk-cc", "dcsk-cc")
LINKS = ("sr", "sd", "rd")

# Ensemble mean power of the chaotic reference (arcsine invariant density).
CHAOS_MEAN_POWER = 0.5


@dataclass(frozen=True)
class Geometry:
    """Node distances in meters."""

    d_sr: float = 1.0
    d_rd: float = 1.0
    d_sd: float = 2.0

    def __post_init__(self) -> None:
        if min(self.d_sr, self.d_rd, self.d_sd) <= 0:
            raise ValueError("distances must be positive")

    def distance(self, link: str) -> float:
        return {"sr": self.d_sr, "rd": self.d_rd, "sd": self.d_sd}[link]


@dataclass(frozen=True)
class PathProfile:
    """Multipath profile shared by all links (per-link overrides via replace)."""

    kind: str  # "awgn" | "rayleigh-equal" | "rayleigh-unequal"
    mean_square_gains: tuple[float, ...]
    delays: tuple[int, ...]

    @classmethod
    def awgn(cls) -> "PathProfile":
        return cls(kind="awgn", mean_square_gains=(1.0,), delays=(0,))

    @classmethod
    def rayleigh_equal(cls, l_paths: int = 3, delays: tuple[int, ...] | None = None) -> "PathProfile":
        """l_paths i.i.d. Rayleigh paths with E{h_l^2} = 1/L, default delays 0..L-1."""
        if delays is None:
            delays = tuple(range(l_paths))
        return cls(kind="rayleigh-equal", mean_square_gains=(1.0 / l_paths,) * l_paths, delays=delays)

    @classmethod
    def rayleigh_unequal(cls, mean_square_gains: tuple[float, ...], delays: tuple[int, ...] | None = None) -> "PathProfile":
        if delays is None:
            delays = tuple(range(len(mean_square_gains)))
        return cls(kind="rayleigh-unequal", mean_square_gains=tuple(mean_square_gains), delays=delays)

    def __post_init__(self) -> None:
        if len(self.mean_square_gains) != len(self.delays):
            raise ValueError("one delay per path required")
        if not self.mean_square_gains:
            raise ValueError("profile needs at least one path")

    @property
    def l_paths(self) -> int:
        return len(self.mean_square_gains)

    def paths(self) -> tuple[PathSpec, ...]:
        if self.kind == "awgn":
            return (PathSpec("fixed", 1.0, 0),)
        return tuple(
            PathSpec("rayleigh", g, d) for g, d in zip(self.mean_square_gains, self.delays)
        )


@dataclass(frozen=True)
class SystemConfig:
    """Everything needed to simulate one system at one noise level."""

    frame: FrameParams
    system_kind: str = "cim-sr-dcsk-cc"
    geometry: Geometry = Geometry()
    power_source: float = 1.0
    power_relay: float = 1.0
    path_loss_exp: float = 2.0
    profile: PathProfile = PathProfile.awgn()
    noise_psd: float = 1.0
    noise_scale: tuple[float, float, float] = (1.0, 1.0, 1.0)  # (sr, rd, sd)
    n_p: int = 1
    normalize_reference_energy: bool = False

    def __post_init__(self) -> None:
        if self.system_kind not in SYSTEM_KINDS:
            raise ValueError(f"unknown system kind {self.system_kind!r}")
        if self.power_source <= 0 or self.power_relay <= 0:
            raise ValueError("transmit powers must be positive")
        if self.noise_psd <= 0:
            raise ValueError("noise_psd must be positive")
        if self.n_p < 1:
            raise ValueError("n_p must be >= 1")
        if self.system_kind == "cim-sr-dcsk-cc" and self.frame.m_c < 1:
            raise ValueError("the proposed system needs n >= 2 (at least one index bit)")
        if self.system_kind == "dcsk-cc" and self.frame.sf % 2 != 0:
            raise ValueError("dcsk-cc needs an even spreading factor")

    def effective_frame(self) -> FrameParams:
        """Frame actually transmitted: dcsk-cc collapses to reference sf/2 + copy sf/2."""
        if self.system_kind == "dcsk-cc":
            return FrameParams(u=self.frame.sf // 2, n=1, chip_time=self.frame.chip_time)
        return self.frame

    def symbol_energy(self) -> float:
        """Ensemble per-frame transmitted chip energy (1+n)*u*E{x^2}."""
        f = self.effective_frame()
        return (1 + f.n) * f.u * CHAOS_MEAN_POWER

    @property
    def slots_per_period(self) -> int:
        return 2 if self.system_kind == "cim-sr-dcsk-cc" else 3

    @property
    def relay_bits_per_stream(self) -> int:
        """Width of the relay-side (index) error class."""
        return self.frame.m_c if self.system_kind == "cim-sr-dcsk-cc" else 1

    @property
    def bits_per_stream(self) -> int:
        return self.relay_bits_per_stream + 1

    def noise_psd_for(self, link: str) -> float:
        # noise_scale is ordered (sr, rd, sd)
        scale = {"sr": self.noise_scale[0], "rd": self.noise_scale[1], "sd": self.noise_scale[2]}
        return self.noise_psd * scale[link]

    def link(self, name: str) -> LinkModel:
        if name not in LINKS:
            raise ValueError(f"unknown link {name!r}")
        power = self.power_relay if name == "rd" else self.power_source
        return LinkModel(
            power=power,
            distance=self.geometry.distance(name),
            path_loss_exp=self.path_loss_exp,
            paths=self.profile.paths(),
            noise_psd=self.noise_psd_for(name),
        )

    def slot_energies(self) -> tuple[float, ...]:
        """Transmitted energy per slot of one stream period."""
        es = self.symbol_energy()
        if self.system_kind == "cim-sr-dcsk-cc":
            return (self.power_source * es, self.power_relay * es)
        return (self.power_source * es, self.power_relay * es, self.power_relay * es)

    def period_energy(self) -> float:
        return float(sum(self.slot_energies()))


@dataclass(frozen=True)
class EnergyLedger:
    """Per-system energy bookkeeping used for equal-total-energy comparisons."""

    system_kind: str
    slots_per_period: int
    bits_per_stream: int
    symbol_energy: float
    slot_energies: tuple[float, ...]
    period_energy: float
    energy_per_bit: float
    frame_energies_per_bit: float


def total_energy_accounting(cfg: SystemConfig) -> EnergyLedger:
    """Energy per transmitted information bit of one stream period."""
    es = cfg.symbol_energy()
    slot_energies = cfg.slot_energies()
    period = cfg.period_energy()
    per_bit = period / cfg.bits_per_stream
    return EnergyLedger(
        system_kind=cfg.system_kind,
        slots_per_period=cfg.slots_per_period,
        bits_per_stream=cfg.bits_per_stream,
        symbol_energy=es,
        slot_energies=slot_energies,
        period_energy=period,
        energy_per_bit=per_bit,
        frame_energies_per_bit=per_bit / es,
    )


def rescale_powers_for_period_energy(cfg: SystemConfig, target: float) -> SystemConfig:
    """Scale both transmit powers so the stream-period energy equals target."""
    factor = target / cfg.period_energy()
    return replace(
        cfg,
        power_source=cfg.power_source * factor,
        power_relay=cfg.power_relay * factor,
    )


@dataclass(frozen=True)
class FrameOutcome:
    """What happened to one stream period."""

    relay_decode_ok: bool
    index_ok: bool
    index_bit_errors: int
    modulated_bit_error: bool

    def __post_init__(self) -> None:
        if (self.index_bit_errors == 0) != self.index_ok:
            raise ValueError("index_bit_errors must be 0 exactly when index_ok")


@dataclass(frozen=True)
class StoppingRule:
    """Stop a grid point once the rarest error class has min_errors, or at max_frames."""

    min_errors: int = 100
    max_frames: int = 1_000_000

    def __post_init__(self) -> None:
        if self.min_errors < 1:
            raise ValueError("min_errors must be >= 1")
        if self.max_frames < 1:
            raise ValueError("max_frames must be >= 1")


@dataclass
class McCounters:
    """Summable error counters for a set of simulated stream periods."""

    frames: int = 0
    index_bit_errors: int = 0
    mod_bit_errors: int = 0
    relay_decode_errors: int = 0
    index_symbol_errors: int = 0
    case_counts: tuple[int, int, int, int] = (0, 0, 0, 0)
    case_mod_errors: tuple[int, int, int, int] = (0, 0, 0, 0)

    def add(self, other: "McCounters") -> None:
        self.frames += other.frames
        self.index_bit_errors += other.index_bit_errors
        self.mod_bit_errors += other.mod_bit_errors
        self.relay_decode_errors += other.relay_decode_errors
        self.index_symbol_errors += other.index_symbol_errors
        self.case_counts = tuple(a + b for a, b in zip(self.case_counts, other.case_counts))
        self.case_mod_errors = tuple(a + b for a, b in zip(self.case_mod_errors, other.case_mod_errors))


@dataclass(frozen=True)
class BerEstimate:
    """Per-class BER at one grid point with binomial 95% confidence half-widths."""

    snr_db: float
    frames: int
    bits_index: int
    bits_mod: int
    bits_total: int
    errors_index: int
    errors_mod: int
    errors_total: int
    ber_index: float
    ber_mod: float
    ber_sys: float
    ci95_index: float
    ci95_mod: float
    ci95_sys: float
    min_errors_reached: bool
    hit_max_frames: bool

    @classmethod
    def from_counters(
        cls,
        snr_db: float,
        counters: McCounters,
        relay_bits_per_stream: int,
        stop: StoppingRule,
    ) -> "BerEstimate":
        frames = counters.frames
        bits_index = frames * relay_bits_per_stream
        bits_mod = frames
        bits_total = bits_index + bits_mod
        errors_index = counters.index_bit_errors
        errors_mod = counters.mod_bit_errors
        errors_total = errors_index + errors_mod

        def _ber_ci(errors: int, bits: int) -> tuple[float, float]:
            p = errors / bits
            return p, 1.96 * np.sqrt(p * (1.0 - p) / bits)

        ber_index, ci_index = _ber_ci(errors_index, bits_index)
        ber_mod, ci_mod = _ber_ci(errors_mod, bits_mod)
        ber_sys, ci_sys = _ber_ci(errors_total, bits_total)
        return cls(
            snr_db=snr_db,
            frames=frames,
            bits_index=bits_index,
            bits_mod=bits_mod,
            bits_total=bits_total,
            errors_index=errors_index,
            errors_mod=errors_mod,
            errors_total=errors_total,
            ber_index=ber_index,
            ber_mod=ber_mod,
            ber_sys=ber_sys,
            ci95_index=ci_index,
            ci95_mod=ci_mod,
            ci95_sys=ci_sys,
            min_errors_reached=min(errors_index, errors_mod) >= stop.min_errors,
            hit_max_frames=frames >= stop.max_frames,
        )


# ---------------------------------------------------------------------------
# frame-level simulation
# ---------------------------------------------------------------------------


def _reference_matrix(cfg: SystemConfig, frame: FrameParams, rng: np.random.Generator, count: int) -> np.ndarray:
    x = chaos.sequence_matrix(chaos.random_seeds(rng, count), frame.u)
    if cfg.normalize_reference_energy:
        target = frame.u * CHAOS_MEAN_POWER
        x *= np.sqrt(target / np.einsum("fu,fu->f", x, x))[:, None]
    return x


def _source_frames(x: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    info = np.tile(x, (1, n)) * b[:, None]
    return np.hstack([x, info])


def _relay_frames(x: np.ndarray, b: np.ndarray, a: np.ndarray, w_rows: np.ndarray, u: int) -> np.ndarray:
    signs = np.repeat(w_rows[a - 1].astype(np.float64), u, axis=1)
    info = signs * np.tile(x, (1, w_rows.shape[0])) * b[:, None]
    return np.hstack([x, info])


_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


def _index_bit_errors(a: np.ndarray, a_hat: np.ndarray) -> np.ndarray:
    return _POPCOUNT[np.bitwise_xor(a - 1, a_hat - 1)]


@dataclass
class _BatchOutcome:
    relay_decode_ok: np.ndarray
    index_ok: np.ndarray
    index_bit_errors: np.ndarray
    modulated_bit_error: np.ndarray


def _simulate_proposed_batch(
    cfg: SystemConfig,
    b: np.ndarray,
    a: np.ndarray,
    rng: np.random.Generator,
    force_relay_bit_flip: bool = False,
) -> _BatchOutcome:
    frame = cfg.frame
    count = b.size
    w = walsh_matrix(frame.n)
    link_sr, link_sd, link_rd = cfg.link("sr"), cfg.link("sd"), cfg.link("rd")

    # slot 1: source broadcast, independent fading and noise per link
    x_s = _reference_matrix(cfg, frame, rng, count)
    e_s = _source_frames(x_s, b.astype(np.float64), frame.n)
    y_sr = propagate_batch(e_s, link_sr, draw_gain_matrix(link_sr, rng, count), rng)
    z_sr = segment_correlations_batch(y_sr, frame).sum(axis=1)
    b_relay = np.where(z_sr > 0.0, 1, -1)
    if force_relay_bit_flip:
        b_relay = -b_relay
    y_sd = propagate_batch(e_s, link_sd, draw_gain_matrix(link_sd, rng, count), rng)
    z_sd = segment_correlations_batch(y_sd, frame).sum(axis=1)

    # slot 2: relay re-encodes its decision with a fresh reference
    x_r = _reference_matrix(cfg, frame, rng, count)
    e_r = _relay_frames(x_r, b_relay.astype(np.float64), a, w.rows, frame.u)
    y_rd = propagate_batch(e_r, link_rd, draw_gain_matrix(link_rd, rng, count), rng)
    c_rd = segment_correlations_batch(y_rd, frame)
    z = c_rd @ w.rows.T.astype(np.float64)
    a_hat = np.argmax(np.abs(z), axis=1) + 1
    z_rd = z[np.arange(count), a_hat - 1]
    b_hat = np.where((z_sd + z_rd) / 2.0 > 0.0, 1, -1)

    bit_errors = _index_bit_errors(a, a_hat)
    return _BatchOutcome(
        relay_decode_ok=b_relay == b,
        index_ok=a_hat == a,
        index_bit_errors=bit_errors,
        modulated_bit_error=b_hat != b,
    )


def _simulate_baseline_batch(
    cfg: SystemConfig,
    b: np.ndarray,
    relay_bit: np.ndarray,
    rng: np.random.Generator,
) -> _BatchOutcome:
    frame = cfg.effective_frame()
    count = b.size
    link_sr, link_sd, link_rd = cfg.link("sr"), cfg.link("sd"), cfg.link("rd")

    # slots 1-2: source bit forwarded with the all-ones row (plain frames)
    x_s = _reference_matrix(cfg, frame, rng, count)
    e_s = _source_frames(x_s, b.astype(np.float64), frame.n)
    y_sr = propagate_batch(e_s, link_sr, draw_gain_matrix(link_sr, rng, count), rng)
    z_sr = segment_correlations_batch(y_sr, frame).sum(axis=1)
    b_relay = np.where(z_sr > 0.0, 1, -1)
    y_sd = propagate_batch(e_s, link_sd, draw_gain_matrix(link_sd, rng, count), rng)
    z_sd = segment_correlations_batch(y_sd, frame).sum(axis=1)

    x_f = _reference_matrix(cfg, frame, rng, count)
    e_f = _source_frames(x_f, b_relay.astype(np.float64), frame.n)
    y_rd = propagate_batch(e_f, link_rd, draw_gain_matrix(link_rd, rng, count), rng)
    z_rd = segment_correlations_batch(y_rd, frame).sum(axis=1)
    b_hat = np.where((z_sd + z_rd) / 2.0 > 0.0, 1, -1)

    # slot 3: the relay's own bit on a fresh plain frame
    x_3 = _reference_matrix(cfg, frame, rng, count)
    e_3 = _source_frames(x_3, relay_bit.astype(np.float64), frame.n)
    y_3 = propagate_batch(e_3, link_rd, draw_gain_matrix(link_rd, rng, count), rng)
    z_3 = segment_correlations_batch(y_3, frame).sum(axis=1)
    relay_bit_hat = np.where(z_3 > 0.0, 1, -1)

    relay_bit_err = relay_bit_hat != relay_bit
    return _BatchOutcome(
        relay_decode_ok=b_relay == b,
        index_ok=~relay_bit_err,
        index_bit_errors=relay_bit_err.astype(np.int64),
        modulated_bit_error=b_hat != b,
    )


def simulate_frame(
    cfg: SystemConfig,
    msg: MessageSymbols,
    rng: np.random.Generator,
    force_relay_bit_flip: bool = False,
) -> FrameOutcome:
    """Run one stream period of the proposed system."""
    if cfg.system_kind != "cim-sr-dcsk-cc":
        raise ValueError(f"simulate_frame handles cim-sr-dcsk-cc, not {cfg.system_kind!r}")
    if not 1 <= msg.a <= cfg.frame.n:
        raise ValueError(f"index symbol {msg.a} outside 1..{cfg.frame.n}")
    out = _simulate_proposed_batch(
        cfg,
        np.array([msg.b]),
        np.array([msg.a]),
        rng,
        force_relay_bit_flip=force_relay_bit_flip,
    )
    return _scalar_outcome(out)


def simulate_frame_baseline(cfg: SystemConfig, msg: MessageSymbols, rng: np.random.Generator) -> FrameOutcome:
    """Run one stream period of a baseline system.

    msg.b is the source bit; msg.a in {1, 2} selects the relay-own bit of
    slot 3 (1 -> +1, 2 -> -1), mirroring the index-symbol role it plays in
    the proposed system.
    """
    if cfg.system_kind not in ("sr-dcsk-cc", "dcsk-cc"):
        raise ValueError(f"simulate_frame_baseline handles baselines, not {cfg.system_kind!r}")
    if msg.a not in (1, 2):
        raise ValueError("baseline relay payload must be a in {1, 2}")
    relay_bit = np.array([1 if msg.a == 1 else -1])
    out = _simulate_baseline_batch(cfg, np.array([msg.b]), relay_bit, rng)
    return _scalar_outcome(out)


def _scalar_outcome(out: _BatchOutcome) -> FrameOutcome:
    return FrameOutcome(
        relay_decode_ok=bool(out.relay_decode_ok[0]),
        index_ok=bool(out.index_ok[0]),
        index_bit_errors=int(out.index_bit_errors[0]),
        modulated_bit_error=bool(out.modulated_bit_error[0]),
    )


# ---------------------------------------------------------------------------
# Monte-Carlo driver
# ---------------------------------------------------------------------------


def noise_psd_for(cfg: SystemConfig, snr_db: float, snr_axis: str = "es-n0") -> float:
    """Base noise PSD realising the requested SNR.

    ``es-n0`` fixes the per-frame symbol energy and reads snr_db as E_s/N0;
    ``et-n0`` reads snr_db as (period energy)/N0, the equal-total-energy axis
    used for cross-system comparisons.
    """
    lin = 10.0 ** (snr_db / 10.0)
    if snr_axis == "es-n0":
        return cfg.symbol_energy() / lin
    if snr_axis == "et-n0":
        return cfg.period_energy() / lin
    raise ValueError(f"unknown snr axis {snr_axis!r}")


def _batch_counters(out: _BatchOutcome) -> McCounters:
    df_err = ~out.relay_decode_ok
    idx_err = ~out.index_ok
    mod_err = out.modulated_bit_error
    cases = (
        ~df_err & ~idx_err,
        df_err & ~idx_err,
        ~df_err & idx_err,
        df_err & idx_err,
    )
    return McCounters(
        frames=out.relay_decode_ok.size,
        index_bit_errors=int(out.index_bit_errors.sum()),
        mod_bit_errors=int(mod_err.sum()),
        relay_decode_errors=int(df_err.sum()),
        index_symbol_errors=int(idx_err.sum()),
        case_counts=tuple(int(c.sum()) for c in cases),
        case_mod_errors=tuple(int((c & mod_err).sum()) for c in cases),
    )


def _mc_batch_job(
    cfg: SystemConfig,
    noise_psd: float,
    seed: int,
    point_idx: int,
    batch_idx: int,
    size: int,
) -> McCounters:
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(point_idx, batch_idx)))
    cfg_pt = replace(cfg, noise_psd=noise_psd)
    b = 1 - 2 * rng.integers(0, 2, size=size)
    if cfg.system_kind == "cim-sr-dcsk-cc":
        a = rng.integers(1, cfg.frame.n + 1, size=size)
        out = _simulate_proposed_batch(cfg_pt, b, a, rng)
    else:
        relay_bit = 1 - 2 * rng.integers(0, 2, size=size)
        out = _simulate_baseline_batch(cfg_pt, b, relay_bit, rng)
    return _batch_counters(out)


def _batch_sizes(max_frames: int, batch_frames: int):
    done = 0
    idx = 0
    while done < max_frames:
        size = min(batch_frames, max_frames - done)
        yield idx, size
        done += size
        idx += 1


def run_point_counters(
    cfg: SystemConfig,
    snr_db: float,
    stop: StoppingRule,
    rng_seed: int,
    point_idx: int = 0,
    workers: int = 1,
    batch_frames: int = 4096,
    snr_axis: str = "es-n0",
) -> McCounters:
    """Accumulate counters for one grid point until the stopping rule fires."""
    n0 = noise_psd_for(cfg, snr_db, snr_axis)
    total = McCounters()

    def _stopped() -> bool:
        return min(total.index_bit_errors, total.mod_bit_errors) >= stop.min_errors

    sizes = list(_batch_sizes(stop.max_frames, batch_frames))
    if workers <= 1:
        for batch_idx, size in sizes:
            total.add(_mc_batch_job(cfg, n0, rng_seed, point_idx, batch_idx, size))
            if _stopped():
                break
        return total

    # Speculative parallel evaluation: results are folded strictly in batch
    # order, so the included set of batches is identical to the sequential run.
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = {}
        next_submit = 0
        next_fold = 0
        lookahead = 2 * workers
        while next_fold < len(sizes):
            while next_submit < len(sizes) and len(pending) < lookahead:
                batch_idx, size = sizes[next_submit]
                pending[batch_idx] = pool.submit(
                    _mc_batch_job, cfg, n0, rng_seed, point_idx, batch_idx, size
                )
                next_submit += 1
            total.add(pending.pop(next_fold).result())
            next_fold += 1
            if _stopped():
                for fut in pending.values():
                    fut.cancel()
                break
    return total


def run_monte_carlo(
    cfg: SystemConfig,
    snr_grid_db,
    stop: StoppingRule = StoppingRule(),
    rng_seed: int = 0,
    workers: int = 1,
    batch_frames: int = 4096,
    snr_axis: str = "es-n0",
) -> list[BerEstimate]:
    """Estimate per-class BER over an SNR grid; deterministic given rng_seed."""
    grid = [float(s) for s in np.atleast_1d(snr_grid_db)]
    if not grid:
        raise ValueError("empty SNR grid")
    estimates = []
    for point_idx, snr_db in enumerate(grid):
        counters = run_point_counters(
            cfg, snr_db, stop, rng_seed, point_idx, workers, batch_frames, snr_axis
        )
        estimates.append(
            BerEstimate.from_counters(snr_db, counters, cfg.relay_bits_per_stream, stop)
        )
    return estimates
