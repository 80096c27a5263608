"""Scenario description for the two-user NOMA downlink and its derived symbols.

All SNRs are stored linear; dB conversion happens only at the CLI/scenario
boundary.  Every object here is a frozen dataclass, safe to share across
concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "ConfigError",
    "TasSolution",
    "NodePosition",
    "LinkGeometry",
    "FadingProfile",
    "ChannelLink",
    "SystemConfig",
    "DerivedParams",
    "derive_params",
    "a_fraction",
    "g_shift",
]


class ConfigError(ValueError):
    """A scenario description violates one of its invariants."""


class TasSolution(Enum):
    """Which link the transmit antenna is selected to maximize.

    ``NEAR`` is solution 1 (best source-to-near-user gain), ``FAR`` is
    solution 2 (best source-to-far-user gain).
    """

    NEAR = "near"
    FAR = "far"

    @classmethod
    def from_token(cls, token: str) -> "TasSolution":
        key = str(token).strip().lower()
        aliases = {
            "1": cls.NEAR, "i": cls.NEAR, "near": cls.NEAR,
            "2": cls.FAR, "ii": cls.FAR, "far": cls.FAR,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ConfigError(f"unknown TAS solution {token!r} (use 1/2 or near/far)") from None

    @property
    def cli_token(self) -> str:
        return "1" if self is TasSolution.NEAR else "2"


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f"{name} must be finite, got {value!r}")
    return value


def _require_positive_int(name: str, value) -> int:
    if isinstance(value, float):
        if not value.is_integer():
            raise ConfigError(f"{name} must be an integer, got {value!r}")
        value = int(value)
    if not isinstance(value, int):
        raise ConfigError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 1:
        raise ConfigError(f"{name} must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class NodePosition:
    """Point in the 2-D deployment plane."""

    x: float
    y: float

    def __post_init__(self):
        _require_finite("x", self.x)
        _require_finite("y", self.y)

    def distance_to(self, other: "NodePosition") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class LinkGeometry:
    """Distance and path-loss exponent of one source-to-node link."""

    distance: float
    path_loss_exponent: float

    def __post_init__(self):
        d = _require_finite("distance", self.distance)
        if d <= 0.0:
            raise ConfigError(f"distance must be > 0, got {d}")
        theta = _require_finite("path_loss_exponent", self.path_loss_exponent)
        if theta < 0.0:
            raise ConfigError(f"path_loss_exponent must be >= 0, got {theta}")

    @classmethod
    def between(
        cls,
        source: NodePosition,
        node: NodePosition,
        path_loss_exponent: float,
        expected_distance: float | None = None,
    ) -> "LinkGeometry":
        d = source.distance_to(node)
        if expected_distance is not None and abs(d - expected_distance) > 1e-12:
            raise ConfigError(
                f"stored distance {expected_distance!r} disagrees with the "
                f"coordinate distance {d!r}"
            )
        return cls(distance=d, path_loss_exponent=path_loss_exponent)


@dataclass(frozen=True)
class FadingProfile:
    """Nakagami-m fading of one link: integer shape m, per-antenna mean square omega.

    Non-integer m is rejected rather than truncated: every finite-sum closed
    form downstream presumes an integer total shape m*L.
    """

    m: int
    omega: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "m", _require_positive_int("m", self.m))
        omega = _require_finite("omega", self.omega)
        if omega <= 0.0:
            raise ConfigError(f"omega must be > 0, got {omega}")


@dataclass(frozen=True)
class ChannelLink:
    """Fading plus large-scale attenuation of one source-to-node link.

    The mean channel power gain lambda = omega / distance**theta may be given
    through ``geometry`` or directly as ``mean_gain``.  When both are present
    they must agree; the geometry value is used.
    """

    fading: FadingProfile
    geometry: LinkGeometry | None = None
    mean_gain: float | None = None

    def __post_init__(self):
        if self.geometry is None and self.mean_gain is None:
            raise ConfigError("a link needs geometry or a direct mean_gain")
        if self.mean_gain is not None:
            mg = _require_finite("mean_gain", self.mean_gain)
            if mg <= 0.0:
                raise ConfigError(f"mean_gain must be > 0, got {mg}")
            if self.geometry is not None:
                geom = self._geometry_gain()
                if abs(geom - mg) > 1e-9 * max(abs(geom), abs(mg)):
                    raise ConfigError(
                        f"mean_gain {mg!r} disagrees with the geometry value {geom!r}"
                    )

    def _geometry_gain(self) -> float:
        g = self.geometry
        return self.fading.omega / g.distance ** g.path_loss_exponent

    @property
    def lam(self) -> float:
        """Mean channel power gain lambda = omega / d**theta."""
        if self.geometry is not None:
            return self._geometry_gain()
        return float(self.mean_gain)


@dataclass(frozen=True)
class SystemConfig:
    """Full scenario: antennas, power split, SNRs, rates, per-link channels.

    gamma0 and gamma_e are the linear average transmit SNRs seen by the
    legitimate users and by the eavesdropper (P_S/N_0 and P_S/N_E); rates are
    in bps/Hz.
    """

    l_s: int
    l_n: int
    l_f: int
    l_e: int
    alpha_f: float
    alpha_n: float
    gamma0: float
    gamma_e: float
    rate_far: float
    rate_secrecy_near: float
    rate_secrecy_far: float
    near: ChannelLink
    far: ChannelLink
    eve: ChannelLink
    quadrature_n: int = 100

    def __post_init__(self):
        for name in ("l_s", "l_n", "l_f", "l_e", "quadrature_n"):
            object.__setattr__(self, name, _require_positive_int(name, getattr(self, name)))
        alpha_f = _require_finite("alpha_f", self.alpha_f)
        alpha_n = _require_finite("alpha_n", self.alpha_n)
        if not (alpha_f > alpha_n > 0.0):
            raise ConfigError(
                f"power split must satisfy alpha_f > alpha_n > 0, got "
                f"alpha_f={alpha_f}, alpha_n={alpha_n}"
            )
        if abs(alpha_f + alpha_n - 1.0) > 1e-12:
            raise ConfigError(f"alpha_f + alpha_n must equal 1, got {alpha_f + alpha_n!r}")
        for name in ("gamma0", "gamma_e"):
            v = _require_finite(name, getattr(self, name))
            if v <= 0.0:
                raise ConfigError(f"{name} must be > 0, got {v}")
        for name in ("rate_far", "rate_secrecy_near", "rate_secrecy_far"):
            v = _require_finite(name, getattr(self, name))
            if v < 0.0:
                raise ConfigError(f"{name} must be >= 0, got {v}")


@dataclass(frozen=True)
class DerivedParams:
    """Auxiliary symbols shared by all closed-form expressions.

    ``eta`` is the secrecy-rate threshold below which the mid outage term of
    the near user vanishes; it is None (undefined) when gamma_th >= beta,
    where the near user's SOP saturates at 1.
    """

    a_n: int
    a_f: int
    a_e: int
    b_n: int
    b_f: int
    lam_ns: float
    lam_fs: float
    lam_es: float
    beta: float
    gamma_th: float
    gamma_s_n: float
    u_f: float
    eta: float | None


def derive_params(config: SystemConfig) -> DerivedParams:
    """Compute every derived symbol of a validated scenario."""
    a_n = config.near.fading.m * config.l_n
    a_f = config.far.fading.m * config.l_f
    a_e = config.eve.fading.m * config.l_e
    beta = config.alpha_f / config.alpha_n
    gamma_th = 2.0 ** config.rate_far - 1.0
    gamma_s_n = (2.0 ** config.rate_secrecy_near - 1.0) / config.alpha_n
    u_f = 1.0 / (config.alpha_n * 2.0 ** config.rate_secrecy_far) - 1.0
    if gamma_th < beta:
        eta = math.log2(config.alpha_f / (config.alpha_f - config.alpha_n * gamma_th))
    else:
        eta = None
    return DerivedParams(
        a_n=a_n,
        a_f=a_f,
        a_e=a_e,
        b_n=a_n * config.l_s,
        b_f=a_f * config.l_s,
        lam_ns=config.near.lam,
        lam_fs=config.far.lam,
        lam_es=config.eve.lam,
        beta=beta,
        gamma_th=gamma_th,
        gamma_s_n=gamma_s_n,
        u_f=u_f,
        eta=eta,
    )


def a_fraction(x: float, alpha_f: float, alpha_n: float) -> float:
    """Map an SINR value x to the gain threshold x / (alpha_f - alpha_n*x).

    Strictly increasing on [0, beta) and divergent at the interference
    ceiling beta = alpha_f/alpha_n; callers must branch to the saturated
    case before crossing it.
    """
    if x < 0.0:
        raise ValueError(f"x must be >= 0, got {x}")
    denom = alpha_f - alpha_n * x
    if denom <= 0.0:
        raise ValueError(
            f"x={x} is at or above the SINR ceiling beta={alpha_f / alpha_n}"
        )
    return x / denom


def g_shift(x: float, rate_secrecy_far: float) -> float:
    """Far-user wiretap threshold map g(x) = 2**R * x + 2**R - 1.

    Affine, with g(0) = 2**R - 1 and g(u_f) = beta exactly.
    """
    scale = 2.0 ** rate_secrecy_far
    return scale * x + (scale - 1.0)
