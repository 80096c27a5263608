"""Command-line front end: sweeps, optimal power split, analytic-vs-MC checks.

Exit codes: 0 success, 1 validation failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .model import ConfigError, TasSolution
from .presets import PRESETS, get_preset
from .scenario import load_scenario, parse_values
from .simulation import EavesdropperMode, estimate_sop
from .sweep import SweepSpec, apply_axis, emit_csv, find_alpha_star, run_sweep
from .outage import sop_overall

__all__ = ["main", "build_parser"]

_VALIDATE_FLOOR = 1e-3


def _load_spec(source: str) -> SweepSpec:
    if source in PRESETS:
        return get_preset(source)
    return load_scenario(source)


def _parse_solutions(text: str):
    if text == "both":
        return (TasSolution.NEAR, TasSolution.FAR)
    return (TasSolution.from_token(text),)


def _apply_overrides(spec: SweepSpec, args) -> SweepSpec:
    if args.trials is not None:
        spec = replace(spec, trials=args.trials)
    if args.seed is not None:
        spec = replace(spec, seed=args.seed)
    if args.solutions is not None:
        spec = replace(spec, solutions=_parse_solutions(args.solutions))
    if getattr(args, "mode", None) is not None:
        spec = replace(spec, mode=EavesdropperMode.from_token(args.mode))
    if args.quadrature_n is not None:
        spec = replace(spec, base=replace(spec.base, quadrature_n=args.quadrature_n))
    return spec


def _cmd_sweep(args) -> int:
    spec = _apply_overrides(_load_spec(args.source), args)
    rows = run_sweep(spec)
    emit_csv(rows, args.out)
    failures = [r for r in rows if r.error]
    print(f"wrote {len(rows)} rows to {args.out}" + (f" ({len(failures)} failed)" if failures else ""))
    for r in failures:
        print(f"  {spec.axis}={r.axis_value} solution {r.solution.cli_token}: {r.error}", file=sys.stderr)
    return 0


def _cmd_alpha_star(args) -> int:
    spec = _apply_overrides(_load_spec(args.preset), args)
    solution = TasSolution.from_token(args.solution)
    grid = parse_values(args.grid)
    alpha, sop = find_alpha_star(spec.base, solution, grid, spec.base.quadrature_n)
    print(f"solution {solution.cli_token}: alpha_f* = {alpha:.6g}  overall SOP* = {sop:.6g}")
    return 0


def _cmd_validate(args) -> int:
    spec = _apply_overrides(_load_spec(args.preset), args)
    if getattr(args, "mode", None) == "wces":
        raise ConfigError(
            "validate compares against the analytic forms, which model the "
            "SIC eavesdropper; wces has no closed forms"
        )
    worst_z = 0.0
    failed = 0
    for index, value in enumerate(spec.values):
        cfg = apply_axis(spec.base, spec.axis, value)
        for solution in spec.solutions:
            breakdown = sop_overall(cfg, solution)
            estimates = estimate_sop(
                cfg, solution, EavesdropperMode.SIC_WITH_INTERFERENCE,
                spec.trials, spec.seed, stream_key=(index,),
            )
            exact = (breakdown.sop_near, breakdown.sop_far, breakdown.sop_overall)
            for label, ex, mc in zip(("SOP_N", "SOP_F", "SOP_O"), exact, estimates):
                gap = abs(ex - mc.mean)
                z = gap / mc.std_error if mc.std_error > 0 else (0.0 if gap == 0 else float("inf"))
                ok = gap <= max(3.0 * mc.std_error, _VALIDATE_FLOOR)
                worst_z = max(worst_z, min(z, gap / _VALIDATE_FLOOR))
                failed += not ok
                print(
                    f"{spec.axis}={value:g} solution {solution.cli_token} {label}: "
                    f"exact={ex:.6g} mc={mc.mean:.6g} stderr={mc.std_error:.2g} "
                    f"{'ok' if ok else 'FAIL'}"
                )
    print(f"max |z| = {worst_z:.3f}")
    if failed:
        print(f"VALIDATION FAILED at {failed} point(s)", file=sys.stderr)
        return 1
    print("VALIDATION PASSED")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noma-secrecy",
        description=(
            "Secrecy outage analysis of a two-user MIMO NOMA downlink with "
            "transmit antenna selection over Nakagami-m fading."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_mode=True):
        p.add_argument("--trials", type=int, default=None, help="Monte Carlo trials per point")
        p.add_argument("--seed", type=int, default=None, help="Monte Carlo seed")
        p.add_argument("--solutions", choices=("1", "2", "both"), default=None,
                       help="TAS solutions to evaluate")
        p.add_argument("--quadrature-n", dest="quadrature_n", type=int, default=None,
                       help="Gauss-Chebyshev nodes for the far-user closed form")
        if with_mode:
            p.add_argument("--mode", choices=("sic", "wces"), default=None,
                           help="eavesdropper model for Monte Carlo outputs")

    presets = ", ".join(sorted(PRESETS))
    p_sweep = sub.add_parser("sweep", help="run a sweep and write a CSV")
    p_sweep.add_argument("source", help=f"scenario file or preset ({presets})")
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    common(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_alpha = sub.add_parser("alpha-star", help="search the optimal power split")
    p_alpha.add_argument("preset", help=f"scenario file or preset ({presets})")
    p_alpha.add_argument("--solution", choices=("1", "2"), required=True)
    p_alpha.add_argument("--grid", required=True, help="alpha_f grid as start:stop:step")
    common(p_alpha, with_mode=False)
    p_alpha.set_defaults(func=_cmd_alpha_star)

    p_val = sub.add_parser("validate", help="compare exact forms against Monte Carlo")
    p_val.add_argument("preset", help=f"scenario file or preset ({presets})")
    common(p_val)
    p_val.set_defaults(func=_cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
