"""Distribution functions of the channel power gains and of the SINRs.

An MRC gain over L receive branches of an integer-m Nakagami link is
Gamma(shape m*L, scale lam/m); selecting the best of l_s transmit antennas
raises its CDF to the l_s-th power.  The far-message SINRs inherit those laws
through x -> A_x/gamma and saturate at the interference ceiling beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .model import ChannelLink, SystemConfig, TasSolution, derive_params
from .numerics import (
    TERM_BUDGET,
    TermBudgetError,
    composition_count,
    log_factorial,
    phi_term,
    reg_lower_incomplete_gamma,
    weak_compositions,
)

__all__ = [
    "GainDistribution",
    "mrc_gain_cdf",
    "mrc_gain_pdf",
    "tas_best_cdf_direct",
    "tas_best_cdf_expanded",
    "tas_expansion_terms",
    "sinr_far_cdf",
    "eve_sinr_far_cdf",
    "eve_sinr_far_pdf",
    "eve_snr_near_cdf",
]


@dataclass(frozen=True)
class GainDistribution:
    """Law of one MRC channel power gain, optionally antenna-selected.

    tas_order is the number of transmit-antenna candidates the gain is the
    maximum over; 1 means no selection.
    """

    m: int
    lam: float
    branches: int
    tas_order: int = 1

    def __post_init__(self):
        if self.m < 1 or self.branches < 1 or self.tas_order < 1:
            raise ValueError("m, branches and tas_order must all be >= 1")
        if not (self.lam > 0.0 and math.isfinite(self.lam)):
            raise ValueError(f"lam must be positive and finite, got {self.lam!r}")

    @property
    def shape(self) -> int:
        """Total Erlang shape a = m * branches."""
        return self.m * self.branches

    @classmethod
    def from_link(cls, link: ChannelLink, branches: int, tas_order: int = 1) -> "GainDistribution":
        return cls(m=link.fading.m, lam=link.lam, branches=branches, tas_order=tas_order)


def _checked(x):
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0.0):
        raise ValueError("gain/SINR arguments must be >= 0")
    return arr


def _maybe_scalar(arr: np.ndarray, scalar: bool):
    return float(arr) if scalar else arr


def mrc_gain_cdf(x, dist: GainDistribution):
    """CDF of an unselected MRC gain: P(a, m*x/lam), the Erlang form."""
    if dist.tas_order != 1:
        raise ValueError("mrc_gain_cdf describes the unselected gain; tas_order must be 1")
    arr = _checked(x)
    out = reg_lower_incomplete_gamma(dist.shape, dist.m * arr / dist.lam)
    return _maybe_scalar(out, arr.ndim == 0)


def mrc_gain_pdf(x, dist: GainDistribution):
    """PDF m**a x**(a-1) e^(-m x/lam) / (Gamma(a) lam**a) of the unselected gain."""
    if dist.tas_order != 1:
        raise ValueError("mrc_gain_pdf describes the unselected gain; tas_order must be 1")
    arr = _checked(x)
    a, m, lam = dist.shape, dist.m, dist.lam
    log_norm = a * math.log(m) - log_factorial(a - 1) - a * math.log(lam)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_pdf = log_norm + (a - 1) * np.log(arr) - m * arr / lam
        out = np.where(arr > 0.0, np.exp(log_pdf), m / lam if a == 1 else 0.0)
    return _maybe_scalar(out, arr.ndim == 0)


def tas_best_cdf_direct(x, dist: GainDistribution):
    """CDF of the best-of-tas_order gain: the unselected CDF raised to tas_order."""
    arr = _checked(x)
    out = reg_lower_incomplete_gamma(dist.shape, dist.m * arr / dist.lam) ** dist.tas_order
    return _maybe_scalar(out, arr.ndim == 0)


@lru_cache(maxsize=128)
def tas_expansion_terms(
    l_s: int, m: int, lam: float, slots: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Multinomial expansion of the best-antenna CDF.

    Returns per-term arrays (p, phi, sign, log_coef) such that
      F(x) = 1 + sum_t sign_t * exp(log_coef_t) * x**phi_t * e^(-p_t*m*x/lam).
    """
    total = sum(composition_count(p, slots) for p in range(1, l_s + 1))
    if total > TERM_BUDGET:
        raise TermBudgetError(
            f"expansion needs {total} compositions (> {TERM_BUDGET}); "
            "reduce the source antennas, fading shape or receive branches"
        )
    ps, phis, signs, log_coefs = [], [], [], []
    for p in range(1, l_s + 1):
        for delta in weak_compositions(p, slots):
            slv, phi = phi_term(delta, l_s, p, m, lam)
            ps.append(p)
            phis.append(phi)
            signs.append(slv.sign)
            log_coefs.append(slv.log_magnitude)
    return (
        np.asarray(ps, dtype=float),
        np.asarray(phis, dtype=float),
        np.asarray(signs, dtype=float),
        np.asarray(log_coefs, dtype=float),
    )


def tas_best_cdf_expanded(x, dist: GainDistribution):
    """Best-antenna CDF through the binomial/multinomial expansion.

    Algebraically identical to tas_best_cdf_direct; evaluated from the
    signed-log expansion terms.
    """
    arr = _checked(x)
    p, phi, sign, log_coef = tas_expansion_terms(
        dist.tas_order, dist.m, dist.lam, dist.shape
    )
    flat = np.atleast_1d(arr)
    # log-domain magnitudes, columns stabilized by their running maximum
    with np.errstate(divide="ignore", invalid="ignore"):
        log_x = np.where(flat > 0.0, np.log(flat), 0.0)
    log_mag = (
        log_coef[:, None]
        + phi[:, None] * log_x[None, :]
        - (p * dist.m / dist.lam)[:, None] * flat[None, :]
    )
    # x == 0: only phi == 0 terms survive (x**0 == 1)
    zero_cols = flat == 0.0
    if np.any(zero_cols):
        log_mag[:, zero_cols] = np.where(
            (phi == 0.0)[:, None], log_coef[:, None], -np.inf
        )
    shift = log_mag.max(axis=0)
    total = np.einsum("t,tx->x", sign, np.exp(log_mag - shift[None, :]))
    out = 1.0 + np.exp(shift) * total
    out = out.reshape(arr.shape)
    return _maybe_scalar(out, arr.ndim == 0)


def _far_gain_cdf(t, cfg: SystemConfig, solution: TasSolution):
    """CDF of the far-user gain under the given selection rule (direct form)."""
    order = cfg.l_s if solution is TasSolution.FAR else 1
    dist = GainDistribution.from_link(cfg.far, cfg.l_f, order)
    return tas_best_cdf_direct(t, dist)


def _near_gain_cdf(t, cfg: SystemConfig, solution: TasSolution):
    """CDF of the near-user gain under the given selection rule (direct form)."""
    order = cfg.l_s if solution is TasSolution.NEAR else 1
    dist = GainDistribution.from_link(cfg.near, cfg.l_n, order)
    return tas_best_cdf_direct(t, dist)


def _ceiling_map(x, cfg: SystemConfig, inner):
    """Evaluate inner(A_x / gamma) below beta and saturate at/above it."""
    arr = _checked(x)
    d = derive_params(cfg)
    flat = np.atleast_1d(arr)
    below = flat < d.beta
    out = np.ones_like(flat)
    if np.any(below):
        xb = flat[below]
        a_x = xb / (cfg.alpha_f - cfg.alpha_n * xb)
        out[below] = inner(a_x)
    out = out.reshape(arr.shape)
    return _maybe_scalar(out, arr.ndim == 0)


def sinr_far_cdf(x, cfg: SystemConfig, solution: TasSolution):
    """CDF of the far user's SINR for its own message.

    Equals the far-gain CDF at A_x/gamma0 below the ceiling beta and is
    exactly 1 from beta on (the SINR never reaches beta).
    """
    return _ceiling_map(x, cfg, lambda a_x: _far_gain_cdf(a_x / cfg.gamma0, cfg, solution))


def eve_sinr_far_cdf(x, cfg: SystemConfig):
    """CDF of the eavesdropper's SINR for the far message (same ceiling at beta)."""
    dist = GainDistribution.from_link(cfg.eve, cfg.l_e)
    return _ceiling_map(x, cfg, lambda a_x: mrc_gain_cdf(a_x / cfg.gamma_e, dist))


def eve_sinr_far_pdf(x, cfg: SystemConfig):
    """PDF of the eavesdropper's SINR for the far message; zero from beta on.

    Finite-sum form
      f(x) = A'_x * c * e^(-w) * [1 + sum_{k=1}^{a_e-1} w**(k-1) (w - k)/k!],
    with w = c * A_x and c = m_e/(gamma_e * lam_es).
    """
    arr = _checked(x)
    d = derive_params(cfg)
    c = cfg.eve.fading.m / (cfg.gamma_e * d.lam_es)
    flat = np.atleast_1d(arr)
    below = flat < d.beta
    out = np.zeros_like(flat)
    if np.any(below):
        xb = flat[below]
        denom = cfg.alpha_f - cfg.alpha_n * xb
        a_x = xb / denom
        w = c * a_x
        series = np.ones_like(w)
        for k in range(1, d.a_e):
            series += w ** (k - 1) * (w - k) / math.factorial(k)
        out[below] = (cfg.alpha_f / denom**2) * c * np.exp(-w) * series
    out = out.reshape(arr.shape)
    return _maybe_scalar(out, arr.ndim == 0)


def eve_snr_near_cdf(x, cfg: SystemConfig):
    """CDF of the eavesdropper's SNR for the near message, alpha_n*gamma_e*Z."""
    arr = _checked(x)
    dist = GainDistribution.from_link(cfg.eve, cfg.l_e)
    out = mrc_gain_cdf(np.atleast_1d(arr) / (cfg.alpha_n * cfg.gamma_e), dist)
    out = np.reshape(out, arr.shape)
    return _maybe_scalar(out, arr.ndim == 0)
