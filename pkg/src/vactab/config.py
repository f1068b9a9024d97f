"""Runtime configuration: enumeration bounds and output defaults.

Values come from (lowest to highest precedence) built-in defaults, an optional
JSON file at ``$VT_CONFIG`` or ``~/.vactab.json``, and the ``VT_ENUM_BOUND``
and ``VT_GROUND_BOUND`` environment variables.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from pathlib import Path

DEFAULT_WALK_BOUND = 7
DEFAULT_GROUND_BOUND = 12


@dataclass(frozen=True)
class CliConfig:
    enumeration_bound: int = DEFAULT_WALK_BOUND
    ground_bound: int = DEFAULT_GROUND_BOUND
    output_format: str = "text"
    time_budget_ms: int = 10_000

    def __post_init__(self):
        if self.enumeration_bound <= 0 or self.ground_bound <= 0 or self.time_budget_ms <= 0:
            raise ValueError("configuration bounds must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def config_path() -> Path:
    env = os.environ.get("VT_CONFIG")
    return Path(env) if env else Path.home() / ".vactab.json"


def load_config() -> CliConfig:
    cfg = CliConfig()
    path = config_path()
    if path.is_file():
        data = json.loads(path.read_text())
        known = {k: v for k, v in data.items() if k in CliConfig.__dataclass_fields__}
        cfg = replace(cfg, **known)
    for var, name in (("VT_ENUM_BOUND", "enumeration_bound"), ("VT_GROUND_BOUND", "ground_bound")):
        env = os.environ.get(var)
        if env:
            cfg = replace(cfg, **{name: int(env)})
    return cfg


def walk_bound() -> int:
    """Largest ``k`` for which walks are enumerated explicitly."""
    return load_config().enumeration_bound


def ground_bound() -> int:
    """Largest ground-set size for brute-force set-partition enumeration."""
    return load_config().ground_bound
