"""Command-line entry point: ``ampent sweep | threshold | oracle-check``.

Exit codes: 0 success, 1 oracle check outside tolerance, 2 configuration
error, 3 I/O error, 4 Fock truncation leakage.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from typing import Sequence

from .config import SCENARIOS, ConfigError, OracleSpec, SweepSpec, load_config
from .errors import AmpentError, StepTooLarge, TruncationLeakage
from .oracles.fock import FockConfig
from .sweeps import run_oracle_check, sweep_csv
from .thresholds import (
    asymmetric_critical_gain,
    critical_phase_mismatch,
    symmetric_critical_gain,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_LEAKAGE = 4


def _overrides(args: argparse.Namespace, names: Sequence[str]) -> dict:
    return {name: getattr(args, name) for name in names if getattr(args, name) is not None}


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        spec = SweepSpec()
        if args.config:
            spec = load_config(args.config).sweep or spec
        spec = replace(
            spec,
            **_overrides(
                args,
                (
                    "scenario", "r", "theta", "eta_list", "gain_min", "gain_max", "gain_steps",
                    "r_prime", "alpha_min", "alpha_max", "alpha_steps", "output_path",
                ),
            ),
        )
        spec.validate()
        text = sweep_csv(spec)
    except (ConfigError, AmpentError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    path = spec.resolved_output()
    try:
        if path.parent != path:
            path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {text.count(chr(10)) - 1} rows to {path}")
    return EXIT_OK


def cmd_threshold(args: argparse.Namespace) -> int:
    try:
        if args.scenario == "phase_sensitive":
            if args.r_prime is None:
                raise ConfigError("phase_sensitive threshold needs --r-prime")
            print(f"alpha0={critical_phase_mismatch(args.r, args.r_prime):.6f}")
            return EXIT_OK
        if args.r < 0.0 or args.eta < 0.0:
            raise ConfigError("r and eta must be nonnegative")
        if args.scenario == "symmetric":
            result = symmetric_critical_gain(args.r, args.eta)
        else:
            if args.r <= 0.0:
                raise ConfigError("asymmetric threshold needs r > 0")
            result = asymmetric_critical_gain(args.r, args.eta)
    except (ConfigError, AmpentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(f"critical_gain={result.format_gain()} solver={result.solver}")
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    try:
        spec = OracleSpec()
        if args.config:
            spec = load_config(args.config).oracle or spec
        spec = replace(spec, **_overrides(args, ("r", "ode_dt")))
        fock_overrides = {}
        if args.dim_per_mode is not None:
            fock_overrides["dim_per_mode"] = args.dim_per_mode
        if args.fock_dt is not None:
            fock_overrides["dt"] = args.fock_dt
        if fock_overrides:
            spec = replace(spec, fock=FockConfig(**{**spec.fock.__dict__, **fock_overrides}))
        spec.validate()
    except (ConfigError, AmpentError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        result = run_oracle_check(spec)
    except TruncationLeakage as exc:
        print(f"truncation leakage: {exc}", file=sys.stderr)
        return EXIT_LEAKAGE
    except StepTooLarge as exc:
        print(f"StepTooLarge: {exc}")
        return EXIT_CHECK_FAILED

    for line in result.lines:
        print(line)
    print(f"max_covariance_discrepancy={result.max_covariance_discrepancy:.3e}")
    print(f"max_log_negativity_discrepancy={result.max_log_negativity_discrepancy:.3e}")
    print(f"max_leakage={result.max_leakage:.3e}")
    print("PASS" if result.passed else "FAIL")
    return EXIT_OK if result.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ampent",
        description="Entanglement of two-mode Gaussian states under amplifier noise.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="write nu_minus and E_N over a gain or phase grid as CSV")
    sweep.add_argument("--config", help="JSON run configuration")
    sweep.add_argument("--scenario", choices=SCENARIOS)
    sweep.add_argument("--r", type=float)
    sweep.add_argument("--theta", type=float)
    sweep.add_argument("--eta", dest="eta_list", type=float, action="append")
    sweep.add_argument("--gain-min", type=float)
    sweep.add_argument("--gain-max", type=float)
    sweep.add_argument("--gain-steps", type=int)
    sweep.add_argument("--r-prime", type=float)
    sweep.add_argument("--alpha-min", type=float)
    sweep.add_argument("--alpha-max", type=float)
    sweep.add_argument("--alpha-steps", type=int)
    sweep.add_argument("--output", dest="output_path")
    sweep.set_defaults(func=cmd_sweep)

    threshold = sub.add_parser("threshold", help="critical gain or critical phase mismatch")
    threshold.add_argument("--scenario", choices=SCENARIOS, required=True)
    threshold.add_argument("--r", type=float, required=True)
    threshold.add_argument("--eta", type=float, default=0.0)
    threshold.add_argument("--r-prime", type=float)
    threshold.set_defaults(func=cmd_threshold)

    oracle = sub.add_parser("oracle-check", help="cross-check channels against both oracles")
    oracle.add_argument("--config", help="JSON run configuration")
    oracle.add_argument("--r", type=float)
    oracle.add_argument("--ode-dt", type=float)
    oracle.add_argument("--dim-per-mode", type=int)
    oracle.add_argument("--fock-dt", type=float)
    oracle.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
