"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one `[acceptance N] ...: PASS/FAIL` line (visible with
`pytest -s`).  Monte Carlo seeds are fixed; tolerances come from the
criteria, not from calibration.
"""

import math
from dataclasses import replace

import numpy as np
import pytest

from noma_secrecy.distributions import (
    GainDistribution,
    eve_sinr_far_cdf,
    eve_snr_near_cdf,
    mrc_gain_cdf,
    sinr_far_cdf,
    tas_best_cdf_direct,
    tas_best_cdf_expanded,
)
from noma_secrecy.model import (
    ChannelLink,
    FadingProfile,
    SystemConfig,
    TasSolution,
    derive_params,
)
from noma_secrecy.outage import (
    lambda3_closed,
    lambda3_integral,
    sop_asymptotic,
    sop_far,
    sop_far_integral,
    sop_near,
    sop_overall,
)
from noma_secrecy.presets import get_preset, reference_config
from noma_secrecy.simulation import (
    EavesdropperMode,
    block_rng,
    estimate_sop,
    ks_critical_value,
    ks_statistic,
    sample_mrc_gain,
)
from noma_secrecy.sweep import apply_axis, find_alpha_star

SIC = EavesdropperMode.SIC_WITH_INTERFERENCE
WCES = EavesdropperMode.WORST_CASE
SOLUTIONS = (TasSolution.NEAR, TasSolution.FAR)

# 3x3x3 grid of (gamma0_dB, gammaE_dB, alpha_f) at the reference antenna and
# fading settings
GRID = [
    (g0, ge, af)
    for g0 in (5.0, 10.0, 20.0)
    for ge in (0.0, 5.0, 10.0)
    for af in (0.6, 0.75, 0.9)
]


def _finish(cid, title, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"\n[acceptance {cid}] {title}: {status}")
    assert not failures, f"criterion {cid}: " + "; ".join(failures)


def _grid_config(g0_db, ge_db, alpha_f):
    return apply_axis(reference_config(gamma0_db=g0_db, gamma_e_db=ge_db), "alphaF", alpha_f)


@pytest.fixture(scope="module")
def criterion1_points():
    """Exact-vs-MC comparison at every criterion-1 point (computed once)."""
    metrics = {"fig2": "sop_near", "fig3": "sop_far", "fig4": "sop_overall"}
    points = []
    point = 0
    for preset_name, metric in metrics.items():
        base = get_preset(preset_name).base
        for ge_db in (0.0, 10.0):
            for g0_db in (0.0, 10.0, 20.0, 30.0, 40.0):
                cfg = apply_axis(apply_axis(base, "gammaE_dB", ge_db), "gamma0_dB", g0_db)
                for sol in SOLUTIONS:
                    exact = getattr(sop_overall(cfg, sol), metric)
                    estimates = estimate_sop(cfg, sol, SIC, 10**6, 1001, stream_key=(point,))
                    mc = dict(zip(("sop_near", "sop_far", "sop_overall"), estimates))[metric]
                    points.append((preset_name, metric, ge_db, g0_db, sol, exact, mc))
                    point += 1
    return points


def _criterion1_failures(points):
    failures = []
    for preset_name, metric, ge_db, g0_db, sol, exact, mc in points:
        tol = max(3.0 * mc.std_error, 1e-3)
        if abs(exact - mc.mean) > tol:
            failures.append(
                f"{preset_name} {metric} gammaE={ge_db} gamma0={g0_db} "
                f"{sol.name}: exact={exact:.6g} mc={mc.mean:.6g} tol={tol:.2g}"
            )
    return failures


# the one point where the overall-SOP product form measurably deviates from
# the joint outage frequency (independence approximation; see README)
KNOWN_CORRELATED_POINT = ("fig4", "sop_overall", 10.0, 0.0, TasSolution.FAR)


def test_acceptance_1_analytic_vs_monte_carlo(criterion1_points):
    failures = _criterion1_failures(criterion1_points)
    if failures and all("sop_overall" in f for f in failures):
        # Known model approximation, not an implementation defect: the
        # analytic overall SOP composes the per-user SOPs as if their
        # outage events were independent, but both events share the same
        # eavesdropper gain and are positively correlated.  The Monte
        # Carlo estimate is the true joint frequency, so at strongly
        # correlated operating points (low gamma0, strong eavesdropper)
        # the product form overstates the joint outage by more than the
        # 1e-3 floor.  The per-user SOPs agree at every point.
        failures.append(
            "note: every failing point is the overall-SOP product form vs "
            "the joint-frequency estimator (independence approximation)"
        )
    _finish(1, "analytic vs Monte Carlo on fig2/fig3/fig4", failures)


def test_acceptance_1_regression_guard(criterion1_points):
    """Pin the criterion-1 failure set to exactly the documented corner.

    This guard stays green and turns red if the closed forms regress
    anywhere else or if the known independence gap drifts; it does not
    replace the faithful criterion test above.
    """
    unexpected = []
    corner_gap = None
    for preset_name, metric, ge_db, g0_db, sol, exact, mc in criterion1_points:
        gap = abs(exact - mc.mean)
        tol = max(3.0 * mc.std_error, 1e-3)
        key = (preset_name, metric, ge_db, g0_db, sol)
        if key == KNOWN_CORRELATED_POINT:
            corner_gap = exact - mc.mean
        elif gap > tol:
            unexpected.append(f"{key}: gap={gap:.3g} tol={tol:.2g}")
    assert not unexpected, unexpected
    # product form overstates the joint outage there by ~3.4e-3
    assert corner_gap is not None
    assert 1e-3 < corner_gap < 6e-3
    print(
        f"\n[acceptance 1 guard] only the documented corner deviates "
        f"(gap {corner_gap:+.2e}): PASS"
    )


def test_acceptance_2_closed_forms_vs_integral_oracles():
    failures = []
    for g0_db, ge_db, alpha_f in GRID:
        cfg = _grid_config(g0_db, ge_db, alpha_f)
        for sol in SOLUTIONS:
            gap3 = abs(lambda3_closed(cfg, sol) - lambda3_integral(cfg, sol))
            if gap3 > 1e-8:
                failures.append(
                    f"lambda3 {sol.name} ({g0_db},{ge_db},{alpha_f}): |diff|={gap3:.2e}"
                )
            gap_f = abs(sop_far(cfg, sol, 1000) - sop_far_integral(cfg, sol))
            if gap_f > 1e-6:
                failures.append(
                    f"sop_far {sol.name} ({g0_db},{ge_db},{alpha_f}): |diff|={gap_f:.2e}"
                )
    _finish(2, "closed forms vs quadrature oracles on the 3x3x3 grid", failures)


def test_acceptance_3_quadrature_stability():
    failures = []
    for g0_db, ge_db, alpha_f in GRID:
        cfg = _grid_config(g0_db, ge_db, alpha_f)
        for sol in SOLUTIONS:
            gap = abs(sop_far(cfg, sol, 100) - sop_far(cfg, sol, 1000))
            if gap > 1e-4:
                failures.append(f"{sol.name} ({g0_db},{ge_db},{alpha_f}): |diff|={gap:.2e}")
    _finish(3, "Gauss-Chebyshev N=100 vs N=1000", failures)


def _random_single_antenna_config(rng):
    def link(lam_lo, lam_hi):
        return ChannelLink(
            fading=FadingProfile(m=int(rng.integers(1, 4)), omega=1.0),
            mean_gain=float(rng.uniform(lam_lo, lam_hi)),
        )

    alpha_f = float(rng.uniform(0.55, 0.95))
    return SystemConfig(
        l_s=1,
        l_n=1,
        l_f=1,
        l_e=1,
        alpha_f=alpha_f,
        alpha_n=1.0 - alpha_f,
        gamma0=10 ** float(rng.uniform(0.0, 3.0)),
        gamma_e=10 ** float(rng.uniform(-0.5, 1.5)),
        rate_far=float(rng.uniform(0.1, 0.8)),
        rate_secrecy_near=float(rng.uniform(0.0, 1.0)),
        rate_secrecy_far=float(rng.uniform(0.0, 1.0)),
        near=link(1.0, 6.0),
        far=link(0.3, 2.0),
        eve=link(0.05, 0.5),
    )


def test_acceptance_4_degenerate_equivalence():
    rng = np.random.default_rng(424242)
    failures = []
    for k in range(20):
        cfg = _random_single_antenna_config(rng)
        asym = {sol: sop_asymptotic(cfg, sol) for sol in SOLUTIONS}
        gaps = [
            ("SOP_N", abs(sop_near(cfg, TasSolution.NEAR) - sop_near(cfg, TasSolution.FAR)), 1.0),
            ("SOP_F", abs(sop_far(cfg, TasSolution.NEAR) - sop_far(cfg, TasSolution.FAR)), 1.0),
            (
                "SOP_O",
                abs(
                    sop_overall(cfg, TasSolution.NEAR).sop_overall
                    - sop_overall(cfg, TasSolution.FAR).sop_overall
                ),
                1.0,
            ),
        ]
        # asymptotic values may exceed 1 at low SNR; compare with a
        # magnitude-scaled tolerance there
        for label, attr in (
            ("asym SOP_N", "sop_near_asym"),
            ("asym SOP_F", "sop_far_asym"),
            ("asym SOP_O", "sop_overall_asym"),
            ("diversity", "diversity_near"),
        ):
            a = getattr(asym[TasSolution.NEAR], attr)
            b = getattr(asym[TasSolution.FAR], attr)
            gaps.append((label, abs(a - b), max(1.0, abs(a), abs(b))))
        for label, gap, scale in gaps:
            if gap > 1e-10 * scale:
                failures.append(f"point {k} {label}: |diff|={gap:.2e}")
    _finish(4, "single-antenna solutions coincide at 20 random points", failures)


def test_acceptance_5_saturated_branch():
    cfg = replace(reference_config(), rate_far=2.0)  # gamma_th = 3 >= beta = 1.5
    failures = []
    for sol in SOLUTIONS:
        if sop_near(cfg, sol) != 1.0:
            failures.append(f"analytic {sol.name} != 1")
        near, _, _ = estimate_sop(cfg, sol, SIC, 10**5, 31)
        if near.mean != 1.0:
            failures.append(f"monte carlo {sol.name} mean {near.mean} != 1")
    _finish(5, "saturated decoding threshold forces SOP_N = 1", failures)


def test_acceptance_6_diversity_orders():
    failures = []
    for m_n, l_n, l_s in ((1, 1, 2), (2, 2, 2)):
        cfg = reference_config(l_s=l_s, l_n=l_n, m_n=m_n)
        lo = apply_axis(cfg, "gamma0_dB", 50.0)
        hi = apply_axis(cfg, "gamma0_dB", 60.0)
        for sol, order in (
            (TasSolution.NEAR, m_n * l_n * l_s),
            (TasSolution.FAR, m_n * l_n),
        ):
            slope = math.log10(sop_near(hi, sol)) - math.log10(sop_near(lo, sol))
            if abs(slope + order) > 0.1 * order:
                failures.append(
                    f"SOP_N slope {sol.name} (m_n={m_n},l_n={l_n},l_s={l_s}): "
                    f"{slope:.3f} vs -{order}"
                )
    ref = reference_config()
    for sol in SOLUTIONS:
        f50 = sop_far(apply_axis(ref, "gamma0_dB", 50.0), sol)
        f60 = sop_far(apply_axis(ref, "gamma0_dB", 60.0), sol)
        if abs(f50 - f60) / f50 >= 0.01:
            failures.append(f"SOP_F floor {sol.name}: {f50:.6g} vs {f60:.6g}")
    _finish(6, "diversity orders from 50-60 dB slopes", failures)


def test_acceptance_7_optimal_power_allocation():
    base = get_preset("fig8").base
    grid = [round(0.51 + 0.01 * k, 2) for k in range(49)]  # 0.51 .. 0.99
    failures = []
    for sol, target in ((TasSolution.NEAR, 0.98), (TasSolution.FAR, 0.92)):
        alpha, _ = find_alpha_star(base, sol, grid)
        if abs(alpha - target) > 0.03:
            failures.append(f"{sol.name}: alpha_f*={alpha} vs {target}+-0.03")
        if alpha in (grid[0], grid[-1]):
            failures.append(f"{sol.name}: maximizer {alpha} sits on the grid edge")
    _finish(7, "optimal power split near (0.98, 0.92)", failures)


def test_acceptance_8_ordering_claims():
    cfg = get_preset("fig8").base  # alpha_f=0.6, gamma0=gammaE=10 dB
    b = {sol: sop_overall(cfg, sol) for sol in SOLUTIONS}
    failures = []
    for sol in SOLUTIONS:
        if not b[sol].sop_near < b[sol].sop_far:
            failures.append(f"{sol.name}: SOP_N !< SOP_F")
    if not b[TasSolution.NEAR].sop_near < b[TasSolution.FAR].sop_near:
        failures.append("near-link selection does not help the near user")
    if not b[TasSolution.FAR].sop_far < b[TasSolution.NEAR].sop_far:
        failures.append("far-link selection does not help the far user")
    if not b[TasSolution.FAR].sop_overall < b[TasSolution.NEAR].sop_overall:
        failures.append("far-link selection does not win overall")
    _finish(8, "secrecy ordering claims at the fig8 operating point", failures)


def test_acceptance_9_distributional_ks_suite():
    cfg = reference_config()
    d = derive_params(cfg)
    n = 100_000
    crit = ks_critical_value(n, alpha=0.01)
    failures = []

    def gains(rng, link, branches, count=n):
        return sample_mrc_gain(rng, link.fading.m, link.lam, branches, count)

    case_id = 0
    for sol in SOLUTIONS:
        rng = block_rng(606060, case_id)
        case_id += 1
        sel_link, sel_branches = (
            (cfg.near, cfg.l_n) if sol is TasSolution.NEAR else (cfg.far, cfg.l_f)
        )
        other_link, other_branches = (
            (cfg.far, cfg.l_f) if sol is TasSolution.NEAR else (cfg.near, cfg.l_n)
        )
        selected = np.max(
            sample_mrc_gain(rng, sel_link.fading.m, sel_link.lam, sel_branches, (n, cfg.l_s)),
            axis=1,
        )
        plain = gains(rng, other_link, other_branches)
        eve = gains(rng, cfg.eve, cfg.l_e)
        sel_dist = GainDistribution.from_link(sel_link, sel_branches, cfg.l_s)
        plain_dist = GainDistribution.from_link(other_link, other_branches)
        eve_dist = GainDistribution.from_link(cfg.eve, cfg.l_e)
        far_gain = plain if sol is TasSolution.NEAR else selected
        sinr_far = cfg.alpha_f * cfg.gamma0 * far_gain / (cfg.alpha_n * cfg.gamma0 * far_gain + 1)
        sinr_eve = cfg.alpha_f * cfg.gamma_e * eve / (cfg.alpha_n * cfg.gamma_e * eve + 1)
        snr_eve_near = cfg.alpha_n * cfg.gamma_e * eve
        checks = [
            (f"best-gain direct [{sol.name}]", selected, lambda x: tas_best_cdf_direct(x, sel_dist)),
            (f"best-gain expanded [{sol.name}]", selected, lambda x: tas_best_cdf_expanded(x, sel_dist)),
            (f"plain gain [{sol.name}]", plain, lambda x: mrc_gain_cdf(x, plain_dist)),
            (f"eve gain [{sol.name}]", eve, lambda x: mrc_gain_cdf(x, eve_dist)),
            (f"far SINR [{sol.name}]", sinr_far, lambda x: sinr_far_cdf(x, cfg, sol)),
            (f"eve far-msg SINR [{sol.name}]", sinr_eve, lambda x: eve_sinr_far_cdf(x, cfg)),
            (f"eve near-msg SNR [{sol.name}]", snr_eve_near, lambda x: eve_snr_near_cdf(x, cfg)),
        ]
        for label, samples, cdf in checks:
            stat = ks_statistic(samples, cdf)
            if stat >= crit:
                failures.append(f"{label}: KS={stat:.5f} >= {crit:.5f}")
    _finish(9, "KS suite for every analytic CDF at 1e5 draws", failures)


def test_acceptance_10_worst_case_dominance():
    spec = get_preset("fig10")
    failures = []
    for index, g0_db in enumerate(spec.values):
        cfg = apply_axis(spec.base, "gamma0_dB", g0_db)
        for sol in spec.solutions:
            sic = estimate_sop(cfg, sol, SIC, 10**5, 515, stream_key=(index,))
            wces = estimate_sop(cfg, sol, WCES, 10**5, 515, stream_key=(index,))
            if wces[2].mean < sic[2].mean:
                failures.append(
                    f"gamma0={g0_db}: wces {wces[2].mean:.4f} < sic {sic[2].mean:.4f}"
                )
    _finish(10, "worst-case eavesdropper dominates SIC mode on fig10", failures)
