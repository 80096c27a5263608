"""Monte Carlo oracle built from the raw system model, no closed forms.

Each trial draws MRC channel power gains (Gamma with integer shape m*L and
scale lam/m), applies the antenna-selection rule, forms the five SINRs and
evaluates the outage events directly from their definitions.  Trials are
split into fixed-size blocks; block b draws from a Philox stream keyed by
SeedSequence(seed, spawn_key=(..., b)), so estimates are reproducible and
independent of how blocks are scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._kernels import _sinr_flags, outage_counts
from .model import SystemConfig, TasSolution, derive_params

__all__ = [
    "EavesdropperMode",
    "TrialOutcome",
    "McEstimate",
    "BLOCK_SIZE",
    "block_rng",
    "sample_mrc_gain",
    "simulate_trial",
    "estimate_sop",
    "empirical_cdf",
    "EmpiricalCdf",
    "ks_statistic",
    "ks_critical_value",
]

BLOCK_SIZE = 1 << 18


class EavesdropperMode(Enum):
    """How capable the eavesdropper's multi-user detector is.

    WORST_CASE removes the superposition interference from its far-message
    SINR (it decodes each message interference-free).
    """

    SIC_WITH_INTERFERENCE = "sic"
    WORST_CASE = "wces"

    @classmethod
    def from_token(cls, token: str) -> "EavesdropperMode":
        key = str(token).strip().lower()
        for mode in cls:
            if key == mode.value:
                return mode
        raise ValueError(f"unknown eavesdropper mode {token!r} (use sic or wces)")


@dataclass(frozen=True)
class TrialOutcome:
    """One trial: outage flags plus which near-outage event fired (0 = none)."""

    outage_near: bool
    outage_far: bool
    outage_overall: bool
    event_index: int


@dataclass(frozen=True)
class McEstimate:
    """Binomial estimate of one outage probability."""

    mean: float
    std_error: float
    trials: int
    seed: int

    @classmethod
    def from_count(cls, count: int, trials: int, seed: int) -> "McEstimate":
        p = count / trials
        return cls(
            mean=p,
            std_error=math.sqrt(p * (1.0 - p) / trials),
            trials=trials,
            seed=seed,
        )


def block_rng(seed: int, block: int, stream_key: tuple[int, ...] = ()) -> np.random.Generator:
    """Independent Philox stream for one block of trials."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(*stream_key, block))
    return np.random.Generator(np.random.Philox(ss))


def sample_mrc_gain(rng: np.random.Generator, m: int, lam: float, branches: int, size=None):
    """Draw MRC channel power gains: Gamma(shape m*branches, scale lam/m)."""
    if m < 1 or branches < 1:
        raise ValueError("m and branches must be >= 1")
    if not lam > 0.0:
        raise ValueError(f"lam must be > 0, got {lam}")
    return rng.gamma(shape=m * branches, scale=lam / m, size=size)


def _draw_gains(rng, cfg: SystemConfig, solution: TasSolution, n: int, full_matrix: bool = False):
    """Per-trial gains (y, x, z) for near, far and eavesdropper links.

    Default path: draw the l_s candidate gains only for the selected link and
    keep one independent draw for each other link (cross-link gains on the
    selected antenna index are independent of the selection).  full_matrix
    draws all l_s gains on every link and indexes all three by the selected
    antenna; used to confirm the shortcut.
    """
    near, far, eve = cfg.near, cfg.far, cfg.eve
    if full_matrix:
        y_all = sample_mrc_gain(rng, near.fading.m, near.lam, cfg.l_n, (n, cfg.l_s))
        x_all = sample_mrc_gain(rng, far.fading.m, far.lam, cfg.l_f, (n, cfg.l_s))
        z_all = sample_mrc_gain(rng, eve.fading.m, eve.lam, cfg.l_e, (n, cfg.l_s))
        chosen = y_all if solution is TasSolution.NEAR else x_all
        idx = np.argmax(chosen, axis=1)[:, None]
        take = lambda g: np.take_along_axis(g, idx, axis=1)[:, 0]
        return take(y_all), take(x_all), take(z_all)
    if solution is TasSolution.NEAR:
        y = sample_mrc_gain(rng, near.fading.m, near.lam, cfg.l_n, (n, cfg.l_s)).max(axis=1)
        x = sample_mrc_gain(rng, far.fading.m, far.lam, cfg.l_f, n)
    else:
        x = sample_mrc_gain(rng, far.fading.m, far.lam, cfg.l_f, (n, cfg.l_s)).max(axis=1)
        y = sample_mrc_gain(rng, near.fading.m, near.lam, cfg.l_n, n)
    z = sample_mrc_gain(rng, eve.fading.m, eve.lam, cfg.l_e, n)
    return y, x, z


def _event_params(cfg: SystemConfig):
    d = derive_params(cfg)
    return (
        cfg.alpha_f * cfg.gamma0,
        cfg.alpha_n * cfg.gamma0,
        cfg.alpha_f * cfg.gamma_e,
        cfg.alpha_n * cfg.gamma_e,
        d.gamma_th,
        2.0 ** cfg.rate_secrecy_near,
        2.0 ** cfg.rate_secrecy_far,
    )


def simulate_trial(
    cfg: SystemConfig,
    solution: TasSolution,
    mode: EavesdropperMode,
    rng: np.random.Generator,
) -> TrialOutcome:
    """Run one trial and classify its outage events."""
    y, x, z = _draw_gains(rng, cfg, solution, 1)
    event, out_n, out_f = _sinr_flags(
        y, x, z, *_event_params(cfg), mode is EavesdropperMode.WORST_CASE
    )
    return TrialOutcome(
        outage_near=bool(out_n[0]),
        outage_far=bool(out_f[0]),
        outage_overall=bool(out_n[0] or out_f[0]),
        event_index=int(event[0]),
    )


def _block_counts(cfg, solution, mode, seed, block, n, stream_key=(), full_matrix=False):
    rng = block_rng(seed, block, stream_key)
    y, x, z = _draw_gains(rng, cfg, solution, n, full_matrix)
    return outage_counts(
        y, x, z, _event_params(cfg), mode is EavesdropperMode.WORST_CASE
    )


def estimate_sop(
    cfg: SystemConfig,
    solution: TasSolution,
    mode: EavesdropperMode,
    trials: int,
    seed: int,
    stream_key: tuple[int, ...] = (),
    full_matrix: bool = False,
) -> tuple[McEstimate, McEstimate, McEstimate]:
    """Estimate (SOP_N, SOP_F, SOP_O) from the same set of trials.

    Deterministic for fixed arguments regardless of scheduling: counts from
    the per-block streams merge by exact integer addition.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    totals = np.zeros(6, dtype=np.int64)
    done = 0
    block = 0
    while done < trials:
        n = min(BLOCK_SIZE, trials - done)
        totals += _block_counts(cfg, solution, mode, seed, block, n, stream_key, full_matrix)
        done += n
        block += 1
    return (
        McEstimate.from_count(int(totals[3]), trials, seed),
        McEstimate.from_count(int(totals[4]), trials, seed),
        McEstimate.from_count(int(totals[5]), trials, seed),
    )


@dataclass(frozen=True)
class EmpiricalCdf:
    """Right-continuous step CDF of a sample."""

    sorted_samples: np.ndarray

    def __call__(self, x):
        n = self.sorted_samples.size
        return np.searchsorted(self.sorted_samples, x, side="right") / n


def empirical_cdf(samples) -> EmpiricalCdf:
    arr = np.sort(np.asarray(samples, dtype=float))
    if arr.size == 0:
        raise ValueError("need at least one sample")
    return EmpiricalCdf(arr)


def ks_statistic(samples, cdf) -> float:
    """Kolmogorov-Smirnov distance between a sample and a model CDF."""
    s = np.sort(np.asarray(samples, dtype=float))
    n = s.size
    f = np.asarray(cdf(s), dtype=float)
    steps = np.arange(1, n + 1) / n
    return float(np.max(np.maximum(steps - f, f - (steps - 1.0 / n))))


def ks_critical_value(n: int, alpha: float = 0.01) -> float:
    """Asymptotic KS critical value c(alpha)/sqrt(n)."""
    return math.sqrt(-0.5 * math.log(alpha / 2.0)) / math.sqrt(n)
