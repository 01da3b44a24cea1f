"""Runtime configuration: explicit overrides > GRASSMOD_* environment > defaults."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

ENV_PREFIX = "GRASSMOD_"
DEFAULT_SEED = 0x5EED_0F_6A55_A4D1


@dataclass(frozen=True)
class Config:
    max_grassmannian: int = 200_000
    max_n: int = 6
    max_spin_dim: int = 5000
    seed: int = DEFAULT_SEED
    cache_dir: str = str(Path.home() / ".cache" / "grassmod")
    workers: int = 1
    simple_exhaustive_bound: int = 1 << 22


def _from_env(environ) -> dict:
    out = {}
    for f in fields(Config):
        raw = environ.get(ENV_PREFIX + f.name.upper())
        if raw is None:
            continue
        out[f.name] = raw if f.type == "str" else int(raw, 0)
    return out


def load_config(overrides: dict | None = None, environ=None) -> Config:
    environ = os.environ if environ is None else environ
    cfg = replace(Config(), **_from_env(environ))
    if overrides:
        cfg = replace(cfg, **{k: v for k, v in overrides.items() if v is not None})
    return cfg


_active: Config | None = None


def get_config() -> Config:
    global _active
    if _active is None:
        _active = load_config()
    return _active


def set_config(cfg: Config | None) -> None:
    """Install ``cfg`` as the active configuration (``None`` re-reads the environment)."""
    global _active
    _active = cfg
