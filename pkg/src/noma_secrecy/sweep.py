"""Parameter sweeps: one operating point per axis value, analytic next to MC.

dB values exist only at this boundary; everything below works on linear
SNRs.  Rows are computed independently, so a failure at one operating point
is recorded on its row and the sweep continues.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, replace

from .model import ConfigError, FadingProfile, SystemConfig, TasSolution
from .outage import sop_asymptotic, sop_overall
from .simulation import EavesdropperMode, estimate_sop

__all__ = [
    "AXES",
    "OUTPUTS",
    "SweepSpec",
    "SweepRow",
    "CSV_COLUMNS",
    "db_to_linear",
    "linear_to_db",
    "apply_axis",
    "run_sweep",
    "find_alpha_star",
    "emit_csv",
]

AXES = (
    "gamma0_dB",
    "gammaE_dB",
    "alphaF",
    "L_S",
    "L_N",
    "L_F",
    "L_E",
    "m_N",
    "m_F",
    "m_E",
)
OUTPUTS = ("exact", "asymptotic", "montecarlo")

CSV_COLUMNS = (
    "axis",
    "axis_value",
    "solution",
    "sopN_exact",
    "sopF_exact",
    "sopO_exact",
    "sopN_asym",
    "sopF_asym",
    "sopO_asym",
    "sopN_mc",
    "sopN_mc_stderr",
    "sopF_mc",
    "sopF_mc_stderr",
    "sopO_mc",
    "sopO_mc_stderr",
    "error",
)


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value: float) -> float:
    return 10.0 * math.log10(value)


def _with_fading(link, m):
    return replace(link, fading=FadingProfile(m=int(m), omega=link.fading.omega))


def apply_axis(cfg: SystemConfig, axis: str, value) -> SystemConfig:
    """New config with one swept parameter replaced."""
    if axis == "gamma0_dB":
        return replace(cfg, gamma0=db_to_linear(float(value)))
    if axis == "gammaE_dB":
        return replace(cfg, gamma_e=db_to_linear(float(value)))
    if axis == "alphaF":
        v = float(value)
        return replace(cfg, alpha_f=v, alpha_n=1.0 - v)
    if axis in ("L_S", "L_N", "L_F", "L_E"):
        return replace(cfg, **{axis.lower(): int(value)})
    if axis == "m_N":
        return replace(cfg, near=_with_fading(cfg.near, value))
    if axis == "m_F":
        return replace(cfg, far=_with_fading(cfg.far, value))
    if axis == "m_E":
        return replace(cfg, eve=_with_fading(cfg.eve, value))
    raise ConfigError(f"unknown sweep axis {axis!r}; expected one of {AXES}")


@dataclass(frozen=True)
class SweepSpec:
    """A sweep: base scenario, one axis, outputs to produce."""

    base: SystemConfig
    axis: str
    values: tuple
    solutions: tuple[TasSolution, ...] = (TasSolution.NEAR, TasSolution.FAR)
    outputs: tuple[str, ...] = ("exact", "montecarlo")
    trials: int = 1_000_000
    seed: int = 20260810
    mode: EavesdropperMode = EavesdropperMode.SIC_WITH_INTERFERENCE

    def __post_init__(self):
        if self.axis not in AXES:
            raise ConfigError(f"unknown sweep axis {self.axis!r}; expected one of {AXES}")
        if not self.values:
            raise ConfigError("sweep values must be non-empty")
        if not self.solutions:
            raise ConfigError("at least one TAS solution is required")
        bad = [o for o in self.outputs if o not in OUTPUTS]
        if bad or not self.outputs:
            raise ConfigError(f"outputs must be a non-empty subset of {OUTPUTS}, got {self.outputs!r}")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")


@dataclass
class SweepRow:
    """One operating point for one solution; absent outputs stay None."""

    axis: str
    axis_value: float
    solution: TasSolution
    sopN_exact: float | None = None
    sopF_exact: float | None = None
    sopO_exact: float | None = None
    sopN_asym: float | None = None
    sopF_asym: float | None = None
    sopO_asym: float | None = None
    sopN_mc: float | None = None
    sopN_mc_stderr: float | None = None
    sopF_mc: float | None = None
    sopF_mc_stderr: float | None = None
    sopO_mc: float | None = None
    sopO_mc_stderr: float | None = None
    error: str | None = None


def _fill_row(row: SweepRow, cfg: SystemConfig, spec: SweepSpec, value_index: int):
    if "exact" in spec.outputs:
        breakdown = sop_overall(cfg, row.solution)
        row.sopN_exact = breakdown.sop_near
        row.sopF_exact = breakdown.sop_far
        row.sopO_exact = breakdown.sop_overall
    if "asymptotic" in spec.outputs:
        asym = sop_asymptotic(cfg, row.solution)
        row.sopN_asym = asym.sop_near_asym
        row.sopF_asym = asym.sop_far_asym
        row.sopO_asym = asym.sop_overall_asym
    if "montecarlo" in spec.outputs:
        near, far, overall = estimate_sop(
            cfg, row.solution, spec.mode, spec.trials, spec.seed,
            stream_key=(value_index,),
        )
        row.sopN_mc, row.sopN_mc_stderr = near.mean, near.std_error
        row.sopF_mc, row.sopF_mc_stderr = far.mean, far.std_error
        row.sopO_mc, row.sopO_mc_stderr = overall.mean, overall.std_error


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate every (axis value, solution) pair; failures mark their row."""
    rows = []
    for index, value in enumerate(spec.values):
        for solution in spec.solutions:
            row = SweepRow(axis=spec.axis, axis_value=float(value), solution=solution)
            try:
                cfg = apply_axis(spec.base, spec.axis, value)
                _fill_row(row, cfg, spec, index)
            except Exception as exc:  # noqa: BLE001 - rows fail independently
                row.error = f"{type(exc).__name__}: {exc}"
            rows.append(row)
    return rows


def find_alpha_star(
    cfg: SystemConfig,
    solution: TasSolution,
    grid,
    quadrature_n: int | None = None,
) -> tuple[float, float]:
    """Power split minimizing the exact overall SOP over a grid of alpha_f.

    Ties break toward the smaller alpha_f.
    """
    best = None
    for alpha in grid:
        alpha = float(alpha)
        point = apply_axis(cfg, "alphaF", alpha)
        value = sop_overall(point, solution, quadrature_n).sop_overall
        if best is None or value < best[1] or (value == best[1] and alpha < best[0]):
            best = (alpha, value)
    if best is None:
        raise ConfigError("alpha_f grid must be non-empty")
    return best


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, TasSolution):
        return value.cli_token
    if isinstance(value, float):
        return repr(value)
    return str(value)


def emit_csv(rows: list[SweepRow], path) -> None:
    """Write rows in the fixed column order; floats round-trip exactly."""
    if not rows:
        raise ValueError("no rows to write")
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([_cell(getattr(row, col)) for col in CSV_COLUMNS])
