import csv

import pytest

from noma_secrecy.model import ConfigError, TasSolution, derive_params
from noma_secrecy.presets import PRESETS, get_preset, reference_config
from noma_secrecy.scenario import load_scenario, parse_values
from noma_secrecy.simulation import EavesdropperMode
from noma_secrecy.sweep import (
    CSV_COLUMNS,
    SweepSpec,
    apply_axis,
    db_to_linear,
    emit_csv,
    find_alpha_star,
    run_sweep,
)

EXACT_ONLY = ("exact",)


def tiny_spec(**overrides):
    defaults = dict(
        base=reference_config(),
        axis="gamma0_dB",
        values=(0.0, 10.0),
        outputs=EXACT_ONLY,
        trials=2000,
        seed=5,
    )
    defaults.update(overrides)
    return SweepSpec(**defaults)


def test_db_conversion():
    assert db_to_linear(0.0) == 1.0
    assert db_to_linear(10.0) == pytest.approx(10.0)
    assert db_to_linear(-3.0) == pytest.approx(10 ** (-0.3))


def test_apply_axis_each_parameter():
    cfg = reference_config()
    assert apply_axis(cfg, "gamma0_dB", 20.0).gamma0 == pytest.approx(100.0)
    assert apply_axis(cfg, "gammaE_dB", 0.0).gamma_e == pytest.approx(1.0)
    swapped = apply_axis(cfg, "alphaF", 0.7)
    assert (swapped.alpha_f, swapped.alpha_n) == (0.7, pytest.approx(0.3))
    assert apply_axis(cfg, "L_S", 3).l_s == 3
    assert apply_axis(cfg, "L_N", 1).l_n == 1
    assert apply_axis(cfg, "L_F", 4).l_f == 4
    assert apply_axis(cfg, "L_E", 2).l_e == 2
    assert apply_axis(cfg, "m_N", 3).near.fading.m == 3
    assert apply_axis(cfg, "m_F", 1).far.fading.m == 1
    assert apply_axis(cfg, "m_E", 3).eve.fading.m == 3
    with pytest.raises(ConfigError):
        apply_axis(cfg, "bogus", 1.0)


def test_spec_validation():
    with pytest.raises(ConfigError):
        tiny_spec(values=())
    with pytest.raises(ConfigError):
        tiny_spec(outputs=())
    with pytest.raises(ConfigError):
        tiny_spec(outputs=("exact", "bogus"))
    with pytest.raises(ConfigError):
        tiny_spec(axis="nope")
    with pytest.raises(ConfigError):
        tiny_spec(solutions=())


def test_run_sweep_shape_and_rows():
    rows = run_sweep(tiny_spec())
    assert len(rows) == 4  # 2 values x 2 solutions
    assert [r.axis_value for r in rows] == [0.0, 0.0, 10.0, 10.0]
    for row in rows:
        assert row.error is None
        assert 0.0 <= row.sopN_exact <= 1.0
        assert row.sopN_mc is None  # montecarlo not requested


def test_run_sweep_marks_invalid_rows_and_continues():
    rows = run_sweep(tiny_spec(axis="alphaF", values=(0.5, 0.7)))
    bad = [r for r in rows if r.axis_value == 0.5]
    good = [r for r in rows if r.axis_value == 0.7]
    assert all(r.error and "alpha" in r.error for r in bad)
    assert all(r.error is None and r.sopO_exact is not None for r in good)


def test_run_sweep_fig4_preset_family():
    # five gamma0 points, both solutions, exact + MC columns filled
    spec = get_preset("fig4")
    spec = SweepSpec(
        base=spec.base,
        axis=spec.axis,
        values=(0.0, 10.0, 20.0, 30.0, 40.0),
        outputs=("exact", "montecarlo"),
        trials=5000,
        seed=3,
    )
    rows = run_sweep(spec)
    assert len(rows) == 10
    for row in rows:
        assert row.error is None
        assert row.sopO_exact is not None
        assert row.sopO_mc is not None and row.sopO_mc_stderr is not None
        assert row.sopN_asym is None


def test_run_sweep_montecarlo_columns():
    spec = tiny_spec(outputs=("exact", "montecarlo"), values=(10.0,), trials=20_000)
    rows = run_sweep(spec)
    for row in rows:
        assert row.sopO_mc is not None
        assert row.sopO_mc_stderr is not None
        assert abs(row.sopO_mc - row.sopO_exact) < max(4 * row.sopO_mc_stderr, 5e-3)


def test_emit_csv_roundtrip(tmp_path):
    rows = run_sweep(tiny_spec())
    path = tmp_path / "out.csv"
    emit_csv(rows, path)
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        assert tuple(reader.fieldnames) == CSV_COLUMNS
        parsed = list(reader)
    assert len(parsed) == len(rows)
    for record, row in zip(parsed, rows):
        assert float(record["axis_value"]) == row.axis_value
        assert record["solution"] == row.solution.cli_token
        # floats round-trip exactly through repr
        assert float(record["sopN_exact"]) == row.sopN_exact
        assert record["sopN_mc"] == ""  # absent output stays empty
        assert record["error"] == ""


def test_emit_csv_deterministic(tmp_path):
    spec = tiny_spec(outputs=("exact", "montecarlo"), trials=5000)
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    emit_csv(run_sweep(spec), a)
    emit_csv(run_sweep(spec), b)
    assert a.read_bytes() == b.read_bytes()


def test_find_alpha_star_single_point():
    cfg = reference_config()
    alpha, value = find_alpha_star(cfg, TasSolution.NEAR, [0.8])
    assert alpha == 0.8
    assert value == pytest.approx(
        run_sweep(tiny_spec(axis="alphaF", values=(0.8,), solutions=(TasSolution.NEAR,)))[
            0
        ].sopO_exact
    )


def test_find_alpha_star_ties_break_toward_smaller_alpha():
    from dataclasses import replace

    # rate_far = 2 keeps gamma_th >= beta on this grid, so SOP_O == 1 at
    # every point; the tie must resolve to the smallest alpha_f
    cfg = replace(reference_config(), rate_far=2.0)
    alpha, value = find_alpha_star(cfg, TasSolution.NEAR, [0.74, 0.6, 0.7])
    assert value == 1.0
    assert alpha == 0.6


def test_emit_csv_rejects_empty(tmp_path):
    with pytest.raises(ValueError):
        emit_csv([], tmp_path / "empty.csv")


def test_preset_fidelity():
    spec = get_preset("fig2")
    d = derive_params(spec.base)
    assert d.beta == pytest.approx(1.5)
    assert d.gamma_th == pytest.approx(2**0.5 - 1)
    assert (d.lam_ns, d.lam_fs) == (pytest.approx(4.0), pytest.approx(1.0))
    assert d.lam_es == pytest.approx(1 / 9.25)
    assert spec.base.quadrature_n == 100
    assert set(PRESETS) == {f"fig{k}" for k in range(2, 11)}
    with pytest.raises(ConfigError):
        get_preset("fig99")


def test_preset_fig10_caption_settings():
    spec = get_preset("fig10")
    assert spec.base.l_s == 2
    assert (spec.base.l_n, spec.base.l_f, spec.base.l_e) == (1, 1, 1)
    assert spec.solutions == (TasSolution.NEAR,)


def test_parse_values():
    assert parse_values("0,5,10") == (0.0, 5.0, 10.0)
    assert parse_values("0:40:10") == (0.0, 10.0, 20.0, 30.0, 40.0)
    assert parse_values("0.52:0.56:0.02") == pytest.approx((0.52, 0.54, 0.56))
    with pytest.raises(ConfigError):
        parse_values("1:2:0")
    with pytest.raises(ConfigError):
        parse_values("1:2")
    with pytest.raises(ConfigError):
        parse_values("a,b")


SCENARIO = """
[system]
L_S = 2
L_N = 2
L_F = 2
L_E = 2
alphaF = 0.6
alphaN = 0.4
gamma0_dB = 10
gammaE_dB = 10
R_F = 0.5
R_sN = 0.5
R_sF = 0.5

[source]
x = 0.0
y = 0.5

[near]
m = 2
x = 0.5
y = 0.5
path_loss_exponent = 2

[far]
m = 2
x = 1.0
y = 0.5
path_loss_exponent = 2

[eve]
m = 2
x = 3.0
y = 0.0
path_loss_exponent = 2

[sweep]
axis = gamma0_dB
values = 0:40:10
solutions = both
outputs = exact
trials = 1000
seed = 42
"""


def write_scenario(tmp_path, text):
    path = tmp_path / "scenario.ini"
    path.write_text(text)
    return path


def test_load_scenario_roundtrip(tmp_path):
    spec = load_scenario(write_scenario(tmp_path, SCENARIO))
    d = derive_params(spec.base)
    assert d.lam_ns == pytest.approx(4.0)
    assert d.lam_es == pytest.approx(1 / 9.25)
    assert spec.axis == "gamma0_dB"
    assert spec.values == (0.0, 10.0, 20.0, 30.0, 40.0)
    assert spec.base.gamma0 == pytest.approx(10.0)
    assert spec.trials == 1000
    assert spec.mode is EavesdropperMode.SIC_WITH_INTERFERENCE
    # matches the same settings built in code
    assert spec.base == reference_config()


def test_load_scenario_missing_key_names_it(tmp_path):
    broken = SCENARIO.replace("alphaN = 0.4\n", "")
    with pytest.raises(ConfigError, match="alphaN"):
        load_scenario(write_scenario(tmp_path, broken))


def test_load_scenario_rejects_unknown_key(tmp_path):
    with pytest.raises(ConfigError, match="typo_key"):
        load_scenario(write_scenario(tmp_path, SCENARIO + "\ntypo_key = 1\n"))
    bad_section = SCENARIO + "\n[extra]\nk = 1\n"
    with pytest.raises(ConfigError, match="extra"):
        load_scenario(write_scenario(tmp_path, bad_section))


def test_load_scenario_rejects_bad_power_split(tmp_path):
    broken = SCENARIO.replace("alphaF = 0.6", "alphaF = 0.5").replace(
        "alphaN = 0.4", "alphaN = 0.5"
    )
    with pytest.raises(ConfigError, match="alpha"):
        load_scenario(write_scenario(tmp_path, broken))


def test_load_scenario_direct_mean_gain(tmp_path):
    direct = SCENARIO
    for section in ("near", "far", "eve"):
        pass
    direct = direct.replace(
        "[near]\nm = 2\nx = 0.5\ny = 0.5\npath_loss_exponent = 2\n",
        "[near]\nm = 2\nmean_gain = 4.0\n",
    )
    spec = load_scenario(write_scenario(tmp_path, direct))
    assert derive_params(spec.base).lam_ns == pytest.approx(4.0)


def test_load_scenario_parse_error(tmp_path):
    with pytest.raises(ConfigError, match="parse error"):
        load_scenario(write_scenario(tmp_path, "not an ini file ]["))


def test_load_scenario_mode_and_solution_tokens(tmp_path):
    text = SCENARIO.replace(
        "solutions = both", "solutions = 2"
    ).replace("seed = 42", "seed = 42\nmode = wces")
    spec = load_scenario(write_scenario(tmp_path, text))
    assert spec.solutions == (TasSolution.FAR,)
    assert spec.mode is EavesdropperMode.WORST_CASE
    bad = SCENARIO.replace("seed = 42", "seed = 42\nmode = loud")
    with pytest.raises(ConfigError, match="mode"):
        load_scenario(write_scenario(tmp_path, bad))
