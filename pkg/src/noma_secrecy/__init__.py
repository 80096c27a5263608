"""Secrecy outage analysis for a two-user MIMO NOMA downlink with TAS.

Closed-form, asymptotic and Monte Carlo evaluation of the secrecy outage
probability of both legitimate users and of the overall system, under two
transmit-antenna-selection rules, over integer-m Nakagami fading.
"""

from .model import (
    ChannelLink,
    ConfigError,
    DerivedParams,
    FadingProfile,
    LinkGeometry,
    NodePosition,
    SystemConfig,
    TasSolution,
    a_fraction,
    derive_params,
    g_shift,
)
from .outage import (
    AsymptoticSop,
    SopBreakdown,
    lambda1,
    lambda2,
    lambda3_closed,
    lambda3_integral,
    sop_asymptotic,
    sop_far,
    sop_far_integral,
    sop_near,
    sop_overall,
)
from .simulation import (
    EavesdropperMode,
    McEstimate,
    TrialOutcome,
    empirical_cdf,
    estimate_sop,
    sample_mrc_gain,
    simulate_trial,
)
from .sweep import SweepRow, SweepSpec, emit_csv, find_alpha_star, run_sweep
from .presets import PRESETS, get_preset, reference_config
from .scenario import load_scenario
from ._kernels import active_backend

__version__ = "0.1.0"

__all__ = [
    "ChannelLink",
    "ConfigError",
    "DerivedParams",
    "FadingProfile",
    "LinkGeometry",
    "NodePosition",
    "SystemConfig",
    "TasSolution",
    "a_fraction",
    "derive_params",
    "g_shift",
    "AsymptoticSop",
    "SopBreakdown",
    "lambda1",
    "lambda2",
    "lambda3_closed",
    "lambda3_integral",
    "sop_asymptotic",
    "sop_far",
    "sop_far_integral",
    "sop_near",
    "sop_overall",
    "EavesdropperMode",
    "McEstimate",
    "TrialOutcome",
    "empirical_cdf",
    "estimate_sop",
    "sample_mrc_gain",
    "simulate_trial",
    "SweepRow",
    "SweepSpec",
    "emit_csv",
    "find_alpha_star",
    "run_sweep",
    "PRESETS",
    "get_preset",
    "reference_config",
    "load_scenario",
    "active_backend",
    "__version__",
]
