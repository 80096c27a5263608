"""Exact, quadrature-based and asymptotic secrecy outage probabilities.

The near user's outage splits into three disjoint events: failing to decode
the far message (lambda1), decoding it while the eavesdropper cannot and the
own-message rate falls short (lambda2), and both decoding it with an
insufficient secrecy margin (lambda3).  lambda3 has a closed series form and
an independent quadrature form; the far user's outage has a Gauss-Chebyshev
series and an independent quadrature form.  The closed series are assembled
from signed-log terms.

At high transmit SNR the lambda3 series cancels below double precision (its
O(1) terms must cancel to ~gamma0**-b_n); the exact evaluator detects the
lost precision and switches to the quadrature form, which stays relatively
accurate at any SNR.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import gammainc, logsumexp

from .model import SystemConfig, TasSolution, a_fraction, derive_params, g_shift
from .numerics import (
    adaptive_integrate,
    chebyshev_nodes,
    log_binomial,
    log_factorial,
    log_gamma,
    signed_logsum_value,
)
from .distributions import tas_expansion_terms

__all__ = [
    "SopBreakdown",
    "AsymptoticSop",
    "lambda1",
    "lambda2",
    "lambda3_integral",
    "lambda3_closed",
    "sop_near",
    "sop_far",
    "sop_far_integral",
    "sop_overall",
    "sop_asymptotic",
]

# clamp excursions beyond [0,1] larger than this indicate a series bug
CLAMP_TOLERANCE = 1e-9
# closed lambda3 is trusted only while it retains this fraction of the
# gross magnitude of its series terms
_CANCELLATION_FLOOR = 1e-9


@dataclass(frozen=True)
class SopBreakdown:
    """One operating point: near-outage split, per-user and overall SOPs.

    When the near user is saturated (gamma_th >= beta) the lambda fields are
    NaN; the split is undefined there and sop_near is exactly 1.
    """

    lambda1: float
    lambda2: float
    lambda3: float
    sop_near: float
    sop_far: float
    sop_overall: float
    saturated_near: bool
    sop_near_raw: float


@dataclass(frozen=True)
class AsymptoticSop:
    """High-SNR approximations and secrecy diversity orders.

    The asymptotic values are meaningful only for large gamma0 and may
    exceed 1 elsewhere.  diversity_far and diversity_overall are always 0.
    """

    sop_near_asym: float
    sop_far_asym: float
    sop_overall_asym: float
    diversity_near: float
    diversity_far: float
    diversity_overall: float


# ---------------------------------------------------------------------------
# scalar CDF/PDF helpers (direct Erlang/power forms, full relative accuracy)


def _near_cdf_fn(cfg: SystemConfig, d, solution: TasSolution):
    order = cfg.l_s if solution is TasSolution.NEAR else 1
    m, lam, a = cfg.near.fading.m, d.lam_ns, d.a_n

    def cdf(t: float) -> float:
        return float(gammainc(a, m * t / lam)) ** order

    return cdf


def _far_cdf_fn(cfg: SystemConfig, d, solution: TasSolution):
    order = cfg.l_s if solution is TasSolution.FAR else 1
    m, lam, a = cfg.far.fading.m, d.lam_fs, d.a_f

    def cdf(t: float) -> float:
        return float(gammainc(a, m * t / lam)) ** order

    return cdf


def _eve_cdf(t: float, cfg: SystemConfig, d) -> float:
    return float(gammainc(d.a_e, cfg.eve.fading.m * t / d.lam_es))


def _eve_gain_logpdf_fn(cfg: SystemConfig, d):
    m, lam, a = cfg.eve.fading.m, d.lam_es, d.a_e
    log_norm = a * math.log(m) - log_factorial(a - 1) - a * math.log(lam)

    def logpdf(x: float) -> float:
        return log_norm + (a - 1) * math.log(x) - m * x / lam

    return logpdf


def _require_unsaturated(d):
    if d.gamma_th >= d.beta:
        raise ValueError(
            "gamma_th >= beta: the near user's SOP saturates at 1; "
            "take the saturated branch instead of the lambda terms"
        )


# ---------------------------------------------------------------------------
# near-user outage terms


def lambda1(cfg: SystemConfig, solution: TasSolution) -> float:
    """Probability the near user fails to decode the far message."""
    d = derive_params(cfg)
    _require_unsaturated(d)
    a_th = a_fraction(d.gamma_th, cfg.alpha_f, cfg.alpha_n)
    return _near_cdf_fn(cfg, d, solution)(a_th / cfg.gamma0)


def lambda2(cfg: SystemConfig, solution: TasSolution) -> float:
    """Far message decoded at N but not at E, own rate below the secrecy target.

    Zero when rate_secrecy_near < eta; the product branch is used from eta on
    (it evaluates to 0 at equality).
    """
    d = derive_params(cfg)
    _require_unsaturated(d)
    if cfg.rate_secrecy_near < d.eta:
        return 0.0
    a_th = a_fraction(d.gamma_th, cfg.alpha_f, cfg.alpha_n)
    near_cdf = _near_cdf_fn(cfg, d, solution)
    bracket = near_cdf(d.gamma_s_n / cfg.gamma0) - near_cdf(a_th / cfg.gamma0)
    return max(0.0, bracket) * _eve_cdf(a_th / cfg.gamma_e, cfg, d)


def lambda3_integral(
    cfg: SystemConfig,
    solution: TasSolution,
    tol_abs: float = 0.0,
    tol_rel: float = 1e-10,
) -> float:
    """Quadrature form of the joint-decoding outage term (reference oracle)."""
    d = derive_params(cfg)
    _require_unsaturated(d)
    a_th = a_fraction(d.gamma_th, cfg.alpha_f, cfg.alpha_n)
    near_cdf = _near_cdf_fn(cfg, d, solution)
    logpdf = _eve_gain_logpdf_fn(cfg, d)
    f_at_ath = near_cdf(a_th / cfg.gamma0)
    scale = 2.0 ** cfg.rate_secrecy_near * cfg.gamma_e

    def integrand(x: float) -> float:
        return (near_cdf((scale * x + d.gamma_s_n) / cfg.gamma0) - f_at_ath) * math.exp(
            logpdf(x)
        )

    return adaptive_integrate(
        integrand, a_th / cfg.gamma_e, math.inf, tol_abs=tol_abs, tol_rel=tol_rel
    )


def _lambda3_closed_terms(cfg: SystemConfig, solution: TasSolution):
    """Signed-log terms of the closed lambda3 series."""
    d = derive_params(cfg)
    _require_unsaturated(d)
    a_th = a_fraction(d.gamma_th, cfg.alpha_f, cfg.alpha_n)
    near_cdf = _near_cdf_fn(cfg, d, solution)
    rate_scale = 2.0 ** cfg.rate_secrecy_near * cfg.gamma_e
    log_gsn = math.log(d.gamma_s_n) if d.gamma_s_n > 0.0 else -math.inf

    signs = []
    mags = []

    def add(sign: float, log_mag: float):
        if log_mag != -math.inf:
            signs.append(sign)
            mags.append(log_mag)

    # survival product: both users clear their thresholds outright
    b1 = (1.0 - near_cdf(a_th / cfg.gamma0)) * (1.0 - _eve_cdf(a_th / cfg.gamma_e, cfg, d))
    if b1 > 0.0:
        add(1.0, math.log(b1))

    if solution is TasSolution.NEAR:
        m_n, lam_ns = cfg.near.fading.m, d.lam_ns
        ps, phis, tsigns, log_coefs = tas_expansion_terms(cfg.l_s, m_n, lam_ns, d.a_n)
        for p, phi, t_sign, log_coef in zip(ps, phis, tsigns, log_coefs):
            p, phi = int(p), int(phi)
            b2 = p * m_n * rate_scale / (cfg.gamma0 * lam_ns) + cfg.eve.fading.m / d.lam_es
            log_b2 = math.log(b2)
            decay = a_th * b2 / cfg.gamma_e
            log_arg = math.log(a_th * b2 / cfg.gamma_e) if a_th > 0.0 else -math.inf
            for m in range(phi + 1):
                if d.gamma_s_n == 0.0 and m != phi:
                    continue
                log_psi = (
                    log_binomial(phi, m)
                    + log_coef
                    + log_gamma(d.a_e + m)
                    + d.a_e * math.log(cfg.eve.fading.m)
                    + m * math.log(rate_scale)
                    + (phi - m) * (log_gsn if phi != m else 0.0)
                    - p * m_n * d.gamma_s_n / (cfg.gamma0 * lam_ns)
                    - log_gamma(d.a_e)
                    - d.a_e * math.log(d.lam_es)
                    - phi * math.log(cfg.gamma0)
                    - (d.a_e + m) * log_b2
                )
                for n in range(d.a_e + m):
                    if a_th == 0.0 and n > 0:
                        continue
                    add(t_sign, log_psi - log_factorial(n) + n * log_arg - decay)
    else:
        m_n, lam_ns = cfg.near.fading.m, d.lam_ns
        b2 = cfg.eve.fading.m / d.lam_es + m_n * rate_scale / (cfg.gamma0 * lam_ns)
        log_b2 = math.log(b2)
        decay = a_th * b2 / cfg.gamma_e
        log_arg = math.log(a_th * b2 / cfg.gamma_e) if a_th > 0.0 else -math.inf
        for m in range(d.a_n):
            for n in range(m + 1):
                if d.gamma_s_n == 0.0 and n != m:
                    continue
                log_psi = (
                    log_binomial(m, n)
                    + m * math.log(m_n)
                    + d.a_e * math.log(cfg.eve.fading.m)
                    + log_gamma(d.a_e + n)
                    + (m - n) * (log_gsn if n != m else 0.0)
                    + n * math.log(rate_scale)
                    - m_n * d.gamma_s_n / (cfg.gamma0 * lam_ns)
                    - log_factorial(m)
                    - log_gamma(d.a_e)
                    - d.a_e * math.log(d.lam_es)
                    - m * math.log(lam_ns)
                    - m * math.log(cfg.gamma0)
                    - (d.a_e + n) * log_b2
                )
                # the series index of the incomplete-gamma expansion carries
                # the power of a_th*b2/gamma_e (inner sum of the theorem)
                for k in range(d.a_e + n):
                    if a_th == 0.0 and k > 0:
                        continue
                    add(-1.0, log_psi - log_factorial(k) + k * log_arg - decay)

    return np.asarray(signs), np.asarray(mags)


def lambda3_closed(cfg: SystemConfig, solution: TasSolution) -> float:
    """Closed series form of the joint-decoding outage term."""
    signs, mags = _lambda3_closed_terms(cfg, solution)
    return signed_logsum_value(signs, mags)


def _lambda3_auto(cfg: SystemConfig, solution: TasSolution) -> float:
    """Closed lambda3 while double precision holds, quadrature beyond."""
    signs, mags = _lambda3_closed_terms(cfg, solution)
    value = signed_logsum_value(signs, mags)
    if mags.size == 0:
        return value
    log_gross = float(logsumexp(mags))
    if value > 0.0 and math.log(value) > log_gross + math.log(_CANCELLATION_FLOOR):
        return value
    return lambda3_integral(cfg, solution)


_LAMBDA3_METHODS = {
    "auto": _lambda3_auto,
    "closed": lambda3_closed,
    "integral": lambda3_integral,
}


@dataclass(frozen=True)
class _NearParts:
    lambda1: float
    lambda2: float
    lambda3: float
    raw: float
    value: float
    saturated: bool


def _clamp_probability(raw: float, what: str) -> float:
    clamped = min(1.0, max(0.0, raw))
    if abs(raw - clamped) > CLAMP_TOLERANCE:
        warnings.warn(
            f"{what} raw value {raw!r} clamped to {clamped}; the "
            f"{abs(raw - clamped):.2e} excursion exceeds {CLAMP_TOLERANCE} "
            "(series cancellation or quadrature truncation beyond contract)",
            RuntimeWarning,
            stacklevel=3,
        )
    return clamped


def _near_parts(cfg, solution, lambda3_method: str = "auto") -> _NearParts:
    d = derive_params(cfg)
    if d.gamma_th >= d.beta:
        nan = math.nan
        return _NearParts(nan, nan, nan, 1.0, 1.0, True)
    try:
        lam3_fn = _LAMBDA3_METHODS[lambda3_method]
    except KeyError:
        raise ValueError(f"unknown lambda3 method {lambda3_method!r}") from None
    l1 = lambda1(cfg, solution)
    l2 = lambda2(cfg, solution)
    l3 = lam3_fn(cfg, solution)
    raw = l1 + l2 + l3
    return _NearParts(l1, l2, l3, raw, _clamp_probability(raw, "SOP_N"), False)


def sop_near(cfg: SystemConfig, solution: TasSolution, lambda3_method: str = "auto") -> float:
    """Exact secrecy outage probability of the near user.

    Exactly 1 when gamma_th >= beta, else lambda1 + lambda2 + lambda3 clamped
    to [0, 1].
    """
    return _near_parts(cfg, solution, lambda3_method).value


# ---------------------------------------------------------------------------
# far-user outage


def _far_quadrature_grid(cfg: SystemConfig, d, n_nodes: int):
    """Per-node quantities shared by the exact and asymptotic series."""
    v = chebyshev_nodes(n_nodes)
    x = (v + 1.0) * d.u_f / 2.0
    log_w = math.log(math.pi * d.u_f / (2.0 * n_nodes)) + 0.5 * np.log1p(-v * v)
    denom = cfg.alpha_f - cfg.alpha_n * x
    a_x = x / denom
    g_x = g_shift(x, cfg.rate_secrecy_far)
    a_g = g_x / (cfg.alpha_f - cfg.alpha_n * g_x)
    w = cfg.eve.fading.m * a_x / (cfg.gamma_e * d.lam_es)
    log_a_x = np.log(a_x)
    log_a_g = np.log(a_g)
    log_denom2 = 2.0 * np.log(denom)
    return x, log_w, a_x, log_a_x, a_g, log_a_g, log_denom2, w


def _append_far_terms(
    signs, mags, log_const, far_exp, eve_exp, p_decay, grid, sign_scale=1.0
):
    """Terms sign_scale * log_const * A_g**far_exp * A_x**(eve_exp-1)
    / denom**2 * exp(-p_decay*A_g - w) * (w - eve_exp) over the nodes."""
    x, log_w, a_x, log_a_x, a_g, log_a_g, log_denom2, w = grid
    factor = w - eve_exp
    keep = factor != 0.0
    mag = (
        log_const
        + log_w
        + far_exp * log_a_g
        + (eve_exp - 1.0) * log_a_x
        - log_denom2
        - p_decay * a_g
        - w
        + np.log(np.abs(np.where(keep, factor, 1.0)))
    )
    signs.append(sign_scale * np.where(factor > 0.0, 1.0, -1.0)[keep])
    mags.append(mag[keep])


def sop_far(cfg: SystemConfig, solution: TasSolution, quadrature_n: int | None = None) -> float:
    """Gauss-Chebyshev closed form of the far user's secrecy outage probability."""
    d = derive_params(cfg)
    if d.u_f <= 0.0:
        return 1.0
    n_nodes = cfg.quadrature_n if quadrature_n is None else int(quadrature_n)
    grid = _far_quadrature_grid(cfg, d, n_nodes)
    m_f, lam_fs = cfg.far.fading.m, d.lam_fs
    m_e, lam_es = cfg.eve.fading.m, d.lam_es

    signs = [np.asarray([1.0])]
    mags = [np.asarray([0.0])]
    if solution is TasSolution.NEAR:
        for m in range(d.a_f):
            for n in range(d.a_e):
                log_const = (
                    math.log(cfg.alpha_f)
                    + m * math.log(m_f)
                    + n * math.log(m_e)
                    - log_factorial(m)
                    - log_factorial(n)
                    - m * math.log(lam_fs)
                    - n * math.log(lam_es)
                    - m * math.log(cfg.gamma0)
                    - n * math.log(cfg.gamma_e)
                )
                # the whole double sum is subtracted from 1
                _append_far_terms(
                    signs, mags, log_const, m, n, m_f / (cfg.gamma0 * lam_fs), grid,
                    sign_scale=-1.0,
                )
    else:
        ps, phis, tsigns, log_coefs = tas_expansion_terms(cfg.l_s, m_f, lam_fs, d.a_f)
        for p, phi, t_sign, log_coef in zip(ps, phis, tsigns, log_coefs):
            for m in range(d.a_e):
                log_const = (
                    log_coef
                    + math.log(cfg.alpha_f)
                    + m * math.log(m_e)
                    - log_factorial(m)
                    - phi * math.log(cfg.gamma0)
                    - m * math.log(cfg.gamma_e)
                    - m * math.log(lam_es)
                )
                _append_far_terms(
                    signs, mags, log_const, phi, m, p * m_f / (cfg.gamma0 * lam_fs), grid,
                    sign_scale=t_sign,
                )

    raw = signed_logsum_value(np.concatenate(signs), np.concatenate(mags))
    return _clamp_probability(raw, "SOP_F")


def sop_far_integral(cfg: SystemConfig, solution: TasSolution) -> float:
    """Quadrature form of the far user's SOP (reference oracle).

    Split at u_f: beyond it the far SINR's CDF argument exceeds beta, so the
    integrand equals the eavesdropper-SINR density and integrates to one
    minus its CDF at u_f.
    """
    d = derive_params(cfg)
    if d.u_f <= 0.0:
        return 1.0
    far_cdf = _far_cdf_fn(cfg, d, solution)
    m_e, lam_es = cfg.eve.fading.m, d.lam_es
    c = m_e / (cfg.gamma_e * lam_es)
    facts = [math.factorial(k) for k in range(d.a_e)]

    def eve_pdf(x: float) -> float:
        denom = cfg.alpha_f - cfg.alpha_n * x
        a_x = x / denom
        w = c * a_x
        series = 1.0
        for k in range(1, d.a_e):
            series += w ** (k - 1) * (w - k) / facts[k]
        return (cfg.alpha_f / (denom * denom)) * c * math.exp(-w) * series

    def integrand(x: float) -> float:
        g = g_shift(x, cfg.rate_secrecy_far)
        return far_cdf(a_fraction(g, cfg.alpha_f, cfg.alpha_n) / cfg.gamma0) * eve_pdf(x)

    tail_start = a_fraction(d.u_f, cfg.alpha_f, cfg.alpha_n) / cfg.gamma_e
    tail = 1.0 - float(gammainc(d.a_e, m_e * tail_start / lam_es))
    body = adaptive_integrate(integrand, 0.0, d.u_f, tol_abs=1e-12, tol_rel=1e-11)
    return body + tail


def sop_overall(
    cfg: SystemConfig,
    solution: TasSolution,
    quadrature_n: int | None = None,
    lambda3_method: str = "auto",
) -> SopBreakdown:
    """Joint breakdown: outage at either user, composed from the two SOPs."""
    parts = _near_parts(cfg, solution, lambda3_method)
    far = sop_far(cfg, solution, quadrature_n)
    overall = 1.0 - (1.0 - far) * (1.0 - parts.value)
    return SopBreakdown(
        lambda1=parts.lambda1,
        lambda2=parts.lambda2,
        lambda3=parts.lambda3,
        sop_near=parts.value,
        sop_far=far,
        sop_overall=overall,
        saturated_near=parts.saturated,
        sop_near_raw=parts.raw,
    )


# ---------------------------------------------------------------------------
# asymptotics and diversity orders


def _sop_near_asym(cfg: SystemConfig, d, solution: TasSolution) -> float:
    if d.gamma_th >= d.beta:
        return 1.0
    m_n, lam_ns = cfg.near.fading.m, d.lam_ns
    m_e, lam_es = cfg.eve.fading.m, d.lam_es
    a_th = a_fraction(d.gamma_th, cfg.alpha_f, cfg.alpha_n)
    if solution is TasSolution.NEAR:
        order_exp = d.b_n
        log_norm = -cfg.l_s * log_factorial(d.a_n)
    else:
        order_exp = d.a_n
        log_norm = -log_factorial(d.a_n)
    log_scale = math.log(m_n / (cfg.gamma0 * lam_ns))
    fz_ath = _eve_cdf(a_th / cfg.gamma_e, cfg, d)
    rate_scale = 2.0 ** cfg.rate_secrecy_near * cfg.gamma_e

    signs = []
    mags = []

    def add(sign, log_mag):
        if log_mag != -math.inf:
            signs.append(sign)
            mags.append(log_mag)

    # leading-order CDF at the decoding threshold
    if a_th > 0.0:
        add(1.0, log_norm + order_exp * (log_scale + math.log(a_th)))
    # mid term, zero below the eta threshold; gamma_s_n >= a_th holds on
    # this branch, so the bracket stays in log form
    if cfg.rate_secrecy_near >= d.eta and d.gamma_s_n > 0.0 and fz_ath > 0.0:
        log_bracket = order_exp * math.log(d.gamma_s_n) + math.log1p(
            -((a_th / d.gamma_s_n) ** order_exp)
        )
        add(1.0, log_norm + order_exp * log_scale + log_bracket + math.log(fz_ath))
    # joint term: boundary piece plus binomial/incomplete-gamma series
    if a_th > 0.0 and fz_ath < 1.0:
        add(
            -1.0,
            log_norm + order_exp * (log_scale + math.log(a_th)) + math.log(1.0 - fz_ath),
        )
    c = m_e * a_th / (cfg.gamma_e * lam_es)
    log_c = math.log(c) if c > 0.0 else -math.inf
    log_gsn = math.log(d.gamma_s_n) if d.gamma_s_n > 0.0 else -math.inf
    for m in range(order_exp + 1):
        if d.gamma_s_n == 0.0 and m != order_exp:
            continue
        log_psi = (
            log_binomial(order_exp, m)
            + order_exp * math.log(m_n)
            + log_gamma(d.a_e + m)
            + (order_exp - m) * (log_gsn if m != order_exp else 0.0)
            + m * math.log(rate_scale)
            + m * math.log(lam_es)
            + log_norm
            - log_gamma(d.a_e)
            - order_exp * math.log(cfg.gamma0 * lam_ns)
            - m * math.log(m_e)
        )
        for n in range(d.a_e + m):
            if c == 0.0 and n > 0:
                continue
            add(1.0, log_psi - log_factorial(n) + n * log_c - c)
    return max(0.0, signed_logsum_value(np.asarray(signs), np.asarray(mags)))


def _sop_far_asym(cfg: SystemConfig, d, solution: TasSolution) -> float:
    if d.u_f <= 0.0:
        return 1.0
    m_f, lam_fs = cfg.far.fading.m, d.lam_fs
    m_e, lam_es = cfg.eve.fading.m, d.lam_es
    grid = _far_quadrature_grid(cfg, d, cfg.quadrature_n)
    # the leading-order far CDF has no exponential factor, so the terms
    # carry no A_g decay in either solution
    if solution is TasSolution.NEAR:
        far_exp = d.a_f
        log_far = d.a_f * math.log(m_f / (cfg.gamma0 * lam_fs)) - log_factorial(d.a_f)
    else:
        far_exp = d.b_f
        log_far = d.b_f * math.log(m_f / (cfg.gamma0 * lam_fs)) - cfg.l_s * log_factorial(d.a_f)

    signs = []
    mags = []
    # floor: eavesdropper SINR already beyond the wiretap threshold at u_f
    a_uf = a_fraction(d.u_f, cfg.alpha_f, cfg.alpha_n)
    c_u = m_e * a_uf / (cfg.gamma_e * lam_es)
    for m in range(d.a_e):
        signs.append(np.asarray([1.0]))
        mags.append(np.asarray([m * math.log(c_u) - c_u - log_factorial(m)]))
    # vanishing part: leading-order far CDF against the eavesdropper density
    for m in range(d.a_e):
        log_const = (
            math.log(cfg.alpha_f)
            + log_far
            + m * math.log(m_e / (cfg.gamma_e * lam_es))
            - log_factorial(m)
        )
        _append_far_terms(signs, mags, log_const, far_exp, m, 0.0, grid)
    raw = signed_logsum_value(np.concatenate(signs), np.concatenate(mags))
    return max(0.0, raw)


def sop_asymptotic(cfg: SystemConfig, solution: TasSolution) -> AsymptoticSop:
    """High-gamma0 SOP approximations and the secrecy diversity orders.

    The near user's diversity order is b_n (near-link selection) or a_n
    (far-link selection) below the ceiling and collapses to 0 at or above
    it; the far user and the overall system always have order 0.
    """
    d = derive_params(cfg)
    near = _sop_near_asym(cfg, d, solution)
    far = _sop_far_asym(cfg, d, solution)
    overall = max(0.0, 1.0 - (1.0 - far) * (1.0 - near))
    if d.gamma_th < d.beta:
        div_near = float(d.b_n if solution is TasSolution.NEAR else d.a_n)
    else:
        div_near = 0.0
    return AsymptoticSop(
        sop_near_asym=near,
        sop_far_asym=far,
        sop_overall_asym=overall,
        diversity_near=div_near,
        diversity_far=0.0,
        diversity_overall=0.0,
    )
