"""Scenario files: flat INI key-value sections, strict about unknown keys.

Grammar (full-line comments with '#' or ';'):

    [system]            required: L_S L_N L_F L_E alphaF alphaN gamma0_dB
                        gammaE_dB R_F R_sN R_sF; optional: quadrature_n
    [source]            optional: x y (required when a link uses coordinates)
    [near] [far] [eve]  required: m; optional: omega (default 1).
                        Large-scale attenuation, one of
                          x y path_loss_exponent   (with [source])
                          distance path_loss_exponent
                          mean_gain
                        mean_gain may accompany either form; values must agree.
    [sweep]             required: axis values; optional: solutions outputs
                        trials seed mode

    values is a comma list (0,5,10) or an inclusive range (0:40:5);
    solutions is 1, 2 or both; outputs is a comma subset of
    exact,asymptotic,montecarlo; mode is sic or wces.
"""

from __future__ import annotations

import configparser

from .model import (
    ChannelLink,
    ConfigError,
    FadingProfile,
    LinkGeometry,
    NodePosition,
    SystemConfig,
    TasSolution,
)
from .simulation import EavesdropperMode
from .sweep import AXES, SweepSpec, db_to_linear

__all__ = ["load_scenario", "parse_values"]

_SYSTEM_REQUIRED = (
    "L_S", "L_N", "L_F", "L_E", "alphaF", "alphaN",
    "gamma0_dB", "gammaE_dB", "R_F", "R_sN", "R_sF",
)
_SYSTEM_OPTIONAL = ("quadrature_n",)
_LINK_KEYS = ("m", "omega", "x", "y", "path_loss_exponent", "distance", "mean_gain")
_SWEEP_KEYS = ("axis", "values", "solutions", "outputs", "trials", "seed", "mode")
_SECTIONS = ("system", "source", "near", "far", "eve", "sweep")


def parse_values(text: str) -> tuple[float, ...]:
    """Comma list '0,5,10' or inclusive range 'start:stop:step'."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"range values need start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise ConfigError(f"range step must be > 0, got {step}")
        out = []
        k = 0
        while True:
            v = start + k * step
            if v > stop + 1e-9 * max(1.0, abs(stop)):
                break
            out.append(v)
            k += 1
        if not out:
            raise ConfigError(f"range {text!r} produces no values")
        return tuple(out)
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise ConfigError(f"could not parse values {text!r}") from None


def _check_keys(section: str, present, allowed, required=()):
    unknown = sorted(set(present) - set(allowed))
    if unknown:
        raise ConfigError(f"unknown key(s) {unknown} in section [{section}]")
    missing = sorted(set(required) - set(present))
    if missing:
        raise ConfigError(f"section [{section}] is missing key(s) {missing}")


def _get_float(section, name: str, key: str) -> float:
    try:
        return float(section[key])
    except ValueError:
        raise ConfigError(f"key {key!r} in section [{name}] is not a number") from None


def _get_int(section, name: str, key: str) -> int:
    raw = section[key]
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"key {key!r} in section [{name}] is not an integer") from None


def _build_link(name: str, section, source: NodePosition | None) -> ChannelLink:
    _check_keys(name, section.keys(), _LINK_KEYS, required=("m",))
    fading = FadingProfile(
        m=_get_int(section, name, "m"),
        omega=_get_float(section, name, "omega") if "omega" in section else 1.0,
    )
    geometry = None
    has_coords = "x" in section or "y" in section
    if has_coords:
        if "x" not in section or "y" not in section:
            raise ConfigError(f"section [{name}] needs both x and y for coordinates")
        if source is None:
            raise ConfigError(f"section [{name}] uses coordinates but [source] is missing")
        if "path_loss_exponent" not in section:
            raise ConfigError(f"section [{name}] needs path_loss_exponent with coordinates")
        position = NodePosition(_get_float(section, name, "x"), _get_float(section, name, "y"))
        geometry = LinkGeometry.between(
            source,
            position,
            _get_float(section, name, "path_loss_exponent"),
            expected_distance=(
                _get_float(section, name, "distance") if "distance" in section else None
            ),
        )
    elif "distance" in section:
        if "path_loss_exponent" not in section:
            raise ConfigError(f"section [{name}] needs path_loss_exponent with distance")
        geometry = LinkGeometry(
            distance=_get_float(section, name, "distance"),
            path_loss_exponent=_get_float(section, name, "path_loss_exponent"),
        )
    mean_gain = _get_float(section, name, "mean_gain") if "mean_gain" in section else None
    return ChannelLink(fading=fading, geometry=geometry, mean_gain=mean_gain)


def load_scenario(path) -> SweepSpec:
    """Parse and fully validate a scenario file into a SweepSpec."""
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keys are case-sensitive
    try:
        with open(path) as handle:
            parser.read_file(handle, source=str(path))
    except configparser.Error as exc:
        raise ConfigError(f"scenario parse error: {exc}") from None

    unknown_sections = sorted(set(parser.sections()) - set(_SECTIONS))
    if unknown_sections:
        raise ConfigError(f"unknown section(s) {unknown_sections}")
    for required in ("system", "near", "far", "eve", "sweep"):
        if required not in parser:
            raise ConfigError(f"missing section [{required}]")

    system = parser["system"]
    _check_keys("system", system.keys(), _SYSTEM_REQUIRED + _SYSTEM_OPTIONAL, _SYSTEM_REQUIRED)

    source = None
    if "source" in parser:
        _check_keys("source", parser["source"].keys(), ("x", "y"), ("x", "y"))
        source = NodePosition(
            _get_float(parser["source"], "source", "x"),
            _get_float(parser["source"], "source", "y"),
        )

    base = SystemConfig(
        l_s=_get_int(system, "system", "L_S"),
        l_n=_get_int(system, "system", "L_N"),
        l_f=_get_int(system, "system", "L_F"),
        l_e=_get_int(system, "system", "L_E"),
        alpha_f=_get_float(system, "system", "alphaF"),
        alpha_n=_get_float(system, "system", "alphaN"),
        gamma0=db_to_linear(_get_float(system, "system", "gamma0_dB")),
        gamma_e=db_to_linear(_get_float(system, "system", "gammaE_dB")),
        rate_far=_get_float(system, "system", "R_F"),
        rate_secrecy_near=_get_float(system, "system", "R_sN"),
        rate_secrecy_far=_get_float(system, "system", "R_sF"),
        near=_build_link("near", parser["near"], source),
        far=_build_link("far", parser["far"], source),
        eve=_build_link("eve", parser["eve"], source),
        quadrature_n=(
            _get_int(system, "system", "quadrature_n") if "quadrature_n" in system else 100
        ),
    )

    sweep = parser["sweep"]
    _check_keys("sweep", sweep.keys(), _SWEEP_KEYS, ("axis", "values"))
    axis = sweep["axis"].strip()
    if axis not in AXES:
        raise ConfigError(f"unknown sweep axis {axis!r}; expected one of {AXES}")
    solutions_text = sweep.get("solutions", "both").strip().lower()
    if solutions_text == "both":
        solutions = (TasSolution.NEAR, TasSolution.FAR)
    else:
        solutions = tuple(TasSolution.from_token(t) for t in solutions_text.split(","))
    outputs = tuple(
        t.strip() for t in sweep.get("outputs", "exact,montecarlo").split(",") if t.strip()
    )
    try:
        mode = EavesdropperMode.from_token(sweep.get("mode", "sic"))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return SweepSpec(
        base=base,
        axis=axis,
        values=parse_values(sweep["values"]),
        solutions=solutions,
        outputs=outputs,
        trials=_get_int(sweep, "sweep", "trials") if "trials" in sweep else 1_000_000,
        seed=_get_int(sweep, "sweep", "seed") if "seed" in sweep else 20260810,
        mode=mode,
    )
