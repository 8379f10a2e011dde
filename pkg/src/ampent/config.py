"""Strict JSON run configuration for the command-line interface."""

from __future__ import annotations

import dataclasses
import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .oracles.fock import FockConfig

OUTPUT_DIR_ENV = "AMPENT_OUTPUT_DIR"
SCENARIOS = ("symmetric", "asymmetric", "phase_sensitive")


class ConfigError(ValueError):
    pass


@dataclass
class SweepSpec:
    scenario: str = "symmetric"
    r: float = 1.0
    theta: float = 0.0
    eta_list: list[float] = field(default_factory=lambda: [0.0])
    gain_min: float = 1.0
    gain_max: float = 3.0
    gain_steps: int = 201
    # phase_sensitive only
    r_prime: float = 0.5
    alpha_min: float = 0.0
    alpha_max: float = math.pi
    alpha_steps: int = 181
    output_path: str = "sweep.csv"

    def validate(self) -> None:
        if self.scenario not in SCENARIOS:
            raise ConfigError(f"scenario must be one of {SCENARIOS}, got {self.scenario!r}")
        if self.r < 0.0:
            raise ConfigError("r must be nonnegative")
        if self.scenario == "phase_sensitive":
            if self.r_prime < 0.0:
                raise ConfigError("r_prime must be nonnegative")
            if self.alpha_steps < 2:
                raise ConfigError("alpha_steps must be >= 2")
            return
        if not self.eta_list:
            raise ConfigError("eta_list must be nonempty")
        if any(eta < 0.0 for eta in self.eta_list):
            raise ConfigError("eta values must be nonnegative")
        if self.gain_min < 1.0 or self.gain_max < self.gain_min:
            raise ConfigError("need 1 <= gain_min <= gain_max")
        if self.gain_steps < 2:
            raise ConfigError("gain_steps must be >= 2")

    def resolved_output(self) -> Path:
        """``output_path``, placed under ``$AMPENT_OUTPUT_DIR`` when it is relative and the variable is set."""
        path = Path(self.output_path)
        base = os.environ.get(OUTPUT_DIR_ENV)
        if base and not path.is_absolute():
            return Path(base) / path
        return path


@dataclass
class OracleSpec:
    r: float = 0.3
    theta: float = 0.0
    gains: list[float] = field(default_factory=lambda: [1.0, 1.3, 1.7])
    etas: list[float] = field(default_factory=lambda: [0.0, 0.5])
    selections: list[str] = field(default_factory=lambda: ["symmetric", "asymmetric"])
    kappa: float = 1.0
    ode_dt: float = 1e-3
    fock: FockConfig = field(default_factory=lambda: FockConfig(dim_per_mode=26))

    def validate(self) -> None:
        if self.r <= 0.0:
            raise ConfigError("oracle r must be positive")
        if not self.gains or any(g < 1.0 for g in self.gains):
            raise ConfigError("oracle gains must be nonempty and >= 1")
        if not self.etas or any(eta < 0.0 for eta in self.etas):
            raise ConfigError("oracle etas must be nonempty and >= 0")
        bad = [s for s in self.selections if s not in ("symmetric", "asymmetric")]
        if bad or not self.selections:
            raise ConfigError(f"unknown oracle selections {bad}")
        if self.kappa <= 0.0 or self.ode_dt <= 0.0:
            raise ConfigError("kappa and ode_dt must be positive")


@dataclass
class RunConfig:
    sweep: Optional[SweepSpec] = None
    oracle: Optional[OracleSpec] = None


def _build(cls, data: Any, where: str):
    if not isinstance(data, dict):
        raise ConfigError(f"{where}: expected an object")
    known = {f.name: f for f in dataclasses.fields(cls)}
    unknown = sorted(set(data) - set(known))
    if unknown:
        raise ConfigError(f"{where}: unknown keys {unknown}")
    kwargs = {}
    for name, value in data.items():
        if cls is OracleSpec and name == "fock":
            value = _build(FockConfig, value, f"{where}.fock")
        kwargs[name] = value
    try:
        return cls(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def parse_config(data: Any) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("config: expected a JSON object")
    unknown = sorted(set(data) - {"sweep", "oracle"})
    if unknown:
        raise ConfigError(f"config: unknown keys {unknown}")
    config = RunConfig()
    if "sweep" in data:
        config.sweep = _build(SweepSpec, data["sweep"], "sweep")
    if "oracle" in data:
        config.oracle = _build(OracleSpec, data["oracle"], "oracle")
    return config


def load_config(path: str | os.PathLike) -> RunConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return parse_config(data)
