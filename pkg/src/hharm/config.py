"""Run configuration: a small validated dataclass loadable from JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from .fields import Grid

__all__ = ["ConfigError", "RunConfig", "SCHEMA"]

SCHEMA = "hharm-config/1"


class ConfigError(ValueError):
    """Raised for malformed, unknown-key or out-of-range configuration."""


@dataclass(frozen=True)
class RunConfig:
    d: int = 1
    L_max: int = 64
    n_rho: int = 256
    r_max: float = 12.0
    n_s: int = 512
    s_half: float = 40.0
    n_t: int = 9
    t_final: float = 0.5
    quadrature_mode: str = "grid"
    seed: int = 42
    suites: tuple = ("all",)
    tolerances: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 1:
            raise ConfigError("d must be >= 1")
        if self.L_max < 0:
            raise ConfigError("L_max must be >= 0")
        if self.n_rho < 8:
            raise ConfigError("n_rho must be >= 8")
        if self.n_s < 8 or self.n_s & (self.n_s - 1):
            raise ConfigError("n_s must be a power of two and >= 8")
        if not (self.r_max > 0 and self.s_half > 0):
            raise ConfigError("r_max and s_half must be positive")
        if self.n_t < 2 or self.t_final <= 0:
            raise ConfigError("n_t must be >= 2 and t_final positive")
        if self.quadrature_mode not in ("grid", "closure"):
            raise ConfigError("quadrature_mode must be 'grid' or 'closure'")
        if not all(
            isinstance(v, (int, float)) and v > 0 for v in self.tolerances.values()
        ):
            raise ConfigError("tolerances must map names to positive numbers")
        object.__setattr__(self, "suites", tuple(self.suites))
        object.__setattr__(self, "tolerances", dict(self.tolerances))

    def grid(self) -> Grid:
        return Grid(
            d=self.d,
            n_rho=self.n_rho,
            r_max=self.r_max,
            n_s=self.n_s,
            s_half=self.s_half,
        )

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_final, self.n_t)

    def tol(self, name: str, default: float) -> float:
        return float(self.tolerances.get(name, default))

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "d": self.d,
            "L_max": self.L_max,
            "n_rho": self.n_rho,
            "r_max": self.r_max,
            "n_s": self.n_s,
            "s_half": self.s_half,
            "n_t": self.n_t,
            "t_final": self.t_final,
            "quadrature_mode": self.quadrature_mode,
            "seed": self.seed,
            "suites": list(self.suites),
            "tolerances": dict(sorted(self.tolerances.items())),
        }

    @classmethod
    def from_json(cls, path) -> "RunConfig":
        """Load a config file, rejecting unknown keys and wrong schemas."""
        try:
            raw = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: not valid JSON ({exc})") from exc
        if not isinstance(raw, dict):
            raise ConfigError(f"{path}: top level must be an object")
        schema = raw.pop("schema", SCHEMA)
        if schema != SCHEMA:
            raise ConfigError(f"{path}: schema {schema!r} != {SCHEMA!r}")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise ConfigError(f"{path}: unknown keys {unknown}")
        try:
            return cls(**raw)
        except TypeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
