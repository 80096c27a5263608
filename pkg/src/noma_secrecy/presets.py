"""Built-in sweep presets reproducing the reference experiment families.

Shared setting: source at (0, 0.5), far user at (1, 0.5), near user at
(0.5, 0.5), eavesdropper at (3, 0); path-loss exponent 2 on every link;
target and secrecy rates all 0.5 bps/Hz; per-antenna mean square gain
omega = 1 on every link (not fixed by the reference experiments; assumed
and configurable); 100 quadrature nodes.

Each preset fixes what its figure caption states and inherits the shared
setting above for everything the caption omits (noted per preset).
"""

from __future__ import annotations

from .model import (
    ChannelLink,
    ConfigError,
    FadingProfile,
    LinkGeometry,
    NodePosition,
    SystemConfig,
    TasSolution,
)
from .sweep import SweepSpec, db_to_linear

__all__ = ["PRESETS", "get_preset", "reference_config"]

SOURCE = NodePosition(0.0, 0.5)
NEAR_USER = NodePosition(0.5, 0.5)
FAR_USER = NodePosition(1.0, 0.5)
EAVESDROPPER = NodePosition(3.0, 0.0)
PATH_LOSS_EXPONENT = 2.0
RATE = 0.5

GAMMA0_DB_GRID = tuple(float(v) for v in range(0, 41, 5))


def _link(position: NodePosition, m: int) -> ChannelLink:
    return ChannelLink(
        fading=FadingProfile(m=m, omega=1.0),
        geometry=LinkGeometry.between(SOURCE, position, PATH_LOSS_EXPONENT),
    )


def reference_config(
    l_s: int = 2,
    l_n: int = 2,
    l_f: int = 2,
    l_e: int = 2,
    m_n: int = 2,
    m_f: int = 2,
    m_e: int = 2,
    alpha_f: float = 0.6,
    gamma0_db: float = 10.0,
    gamma_e_db: float = 10.0,
    quadrature_n: int = 100,
) -> SystemConfig:
    """Baseline scenario used by all presets."""
    return SystemConfig(
        l_s=l_s,
        l_n=l_n,
        l_f=l_f,
        l_e=l_e,
        alpha_f=alpha_f,
        alpha_n=1.0 - alpha_f,
        gamma0=db_to_linear(gamma0_db),
        gamma_e=db_to_linear(gamma_e_db),
        rate_far=RATE,
        rate_secrecy_near=RATE,
        rate_secrecy_far=RATE,
        near=_link(NEAR_USER, m_n),
        far=_link(FAR_USER, m_f),
        eve=_link(EAVESDROPPER, m_e),
        quadrature_n=quadrature_n,
    )


def _gamma0_sweep(base: SystemConfig, **kwargs) -> SweepSpec:
    return SweepSpec(
        base=base,
        axis="gamma0_dB",
        values=GAMMA0_DB_GRID,
        outputs=("exact", "asymptotic", "montecarlo"),
        **kwargs,
    )


def fig2() -> SweepSpec:
    """Near-user SOP vs gamma0; caption fixes m=2 and L_S=L_N=L_E=2 at
    alpha_f=0.6 (L_F inherited as 2; it does not enter SOP_N).  gammaE
    defaults to 10 dB, one of the caption's curve family values."""
    return _gamma0_sweep(reference_config())


def fig3() -> SweepSpec:
    """Far-user SOP vs gamma0; caption fixes m=2 and L_S=L_F=L_E=2 at
    alpha_f=0.6 (L_N inherited as 2; it does not enter SOP_F)."""
    return _gamma0_sweep(reference_config())


def fig4() -> SweepSpec:
    """Overall SOP vs gamma0; caption fixes m=2 and all four antenna counts
    at 2, alpha_f=0.6."""
    return _gamma0_sweep(reference_config())


def fig5() -> SweepSpec:
    """Near-user SOP vs gamma0 across antenna combinations at gammaE=10 dB;
    this preset carries the (L_S, L_N, L_E) = (2, 2, 2) member of the
    family.  Sweep other combinations via a scenario file."""
    return _gamma0_sweep(reference_config())


def fig6() -> SweepSpec:
    """Far-user SOP vs gamma0 across antenna combinations at gammaE=10 dB;
    carries the (L_S, L_F, L_E) = (2, 2, 2) member of the family."""
    return _gamma0_sweep(reference_config())


def fig7() -> SweepSpec:
    """Overall SOP vs gamma0 across antenna combinations at gammaE=10 dB;
    carries the all-two member of the family."""
    return _gamma0_sweep(reference_config())


def fig8() -> SweepSpec:
    """Overall SOP vs alpha_f at gamma0=gammaE=10 dB, m=2, all antennas 2.
    The interior maximizer of the secrecy performance sits near
    alpha_f=0.98 (near-link selection) / 0.92 (far-link selection)."""
    values = tuple(round(0.52 + 0.02 * k, 2) for k in range(24))  # 0.52..0.98
    return SweepSpec(
        base=reference_config(),
        axis="alphaF",
        values=values,
        outputs=("exact", "montecarlo"),
    )


def fig9() -> SweepSpec:
    """Overall SOP vs m_E at gamma0=gammaE=10 dB, alpha_f=0.6, antennas 2;
    carries the (m_N, m_F) = (2, 2) member of the caption's family."""
    return SweepSpec(
        base=reference_config(),
        axis="m_E",
        values=(1, 2, 3),
        outputs=("exact", "montecarlo"),
    )


def fig10() -> SweepSpec:
    """Protocol comparison sweep: near-link selection only, L_S=2 with
    single-antenna users and eavesdropper (caption differs here from the
    L=2 settings of the other figures), m=2, alpha_f=0.6, gammaE=10 dB.
    Run it with --mode wces for the worst-case eavesdropper benchmark."""
    return _gamma0_sweep(
        reference_config(l_n=1, l_f=1, l_e=1),
        solutions=(TasSolution.NEAR,),
    )


PRESETS = {
    "fig2": fig2,
    "fig3": fig3,
    "fig4": fig4,
    "fig5": fig5,
    "fig6": fig6,
    "fig7": fig7,
    "fig8": fig8,
    "fig9": fig9,
    "fig10": fig10,
}


def get_preset(name: str) -> SweepSpec:
    try:
        builder = PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ConfigError(f"unknown preset {name!r}; available: {known}") from None
    return builder()
