"""Runtime configuration with CLI > environment > config file precedence."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path
from typing import Any, Mapping


class ConfigError(ValueError):
    pass


_ENV_PREFIX = "NLQUERY_"

_ENV_KEYS = {
    "corpus_path": "NLQUERY_CORPUS",
    "vocab_path": "NLQUERY_VOCAB",
    "lexicon_path": "NLQUERY_LEXICON",
    "source_root": "NLQUERY_SOURCE_ROOT",
    "gold_set_path": "NLQUERY_GOLD",
    "service_port": "NLQUERY_PORT",
    "ui_dir": "NLQUERY_UI_DIR",
}

_PATH_FIELDS = ("corpus_path", "vocab_path", "lexicon_path", "source_root",
                "gold_set_path", "ui_dir")


@dataclass
class Config:
    """Paths default to the bundled data files when left unset."""

    corpus_path: Path | None = None
    vocab_path: Path | None = None
    lexicon_path: Path | None = None
    source_root: Path | None = None
    gold_set_path: Path | None = None
    service_port: int = 8000
    ui_dir: Path | None = None

    def __post_init__(self) -> None:
        if not 1024 <= self.service_port <= 65535:
            raise ConfigError(f"service_port must be in 1024..65535, got {self.service_port}")
        for name in _PATH_FIELDS:
            value = getattr(self, name)
            if value is not None and not Path(value).exists():
                raise ConfigError(f"{name} does not exist: {value}")

    def resolved_source_root(self) -> Path:
        if self.source_root is not None:
            return Path(self.source_root)
        return Path(str(resources.files("nlquery.data").joinpath("sample_src")))

    def resolved_gold_path(self) -> Path:
        if self.gold_set_path is not None:
            return Path(self.gold_set_path)
        return Path(str(resources.files("nlquery.data").joinpath("gold.tsv")))


def _coerce(name: str, value: Any) -> Any:
    if value is None:
        return None
    if name == "service_port":
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigError(f"service_port must be an integer, got {value!r}") from None
    if name in _PATH_FIELDS:
        return Path(value)
    return value


def load_config(
    overrides: Mapping[str, Any] | None = None,
    env: Mapping[str, str] | None = None,
    config_file: str | Path | None = None,
) -> Config:
    """Merge sources into a Config; explicit flags beat NLQUERY_* variables,
    which beat the JSON config file."""
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    env = os.environ if env is None else env

    merged: dict[str, Any] = {}
    file_path = config_file or env.get(_ENV_PREFIX + "CONFIG")
    if file_path:
        path = Path(file_path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON in config file {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"config file {path} must hold a JSON object")
        known = {f.name for f in fields(Config)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys in {path}: {sorted(unknown)}")
        merged.update(data)

    for name, env_key in _ENV_KEYS.items():
        if env_key in env:
            merged[name] = env[env_key]

    merged.update(overrides)
    kwargs = {name: _coerce(name, value) for name, value in merged.items()}
    return Config(**kwargs)
