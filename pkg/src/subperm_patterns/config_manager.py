import copy
import logging
import os
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG: Dict[str, Any] = {
    "oracle": {
        "ceiling": 11,
    },
    "series": {
        "terms": 20,
        "h_terms": 60,
    },
    "montecarlo": {
        "samples": 100_000,
        "seed": 20240601,
        "workers": 1,
        "chunk_size": 1000,
        "work_cap": 10_000_000,
        "max_pattern_length": 5,
    },
    "roots": {
        "precision_bits": 128,
        "bracket_width": 1e-20,
    },
    "output": {
        "float_digits": 12,
    },
    "avoidance_sequences": {},
}

# environment variable -> dotted config key
ENV_OVERRIDES = {
    "SUBPERM_ORACLE_CEILING": "oracle.ceiling",
    "SUBPERM_WORKERS": "montecarlo.workers",
    "SUBPERM_SEED": "montecarlo.seed",
}


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _set_dotted(config: Dict[str, Any], dotted: str, value: Any) -> None:
    *parents, leaf = dotted.split(".")
    node = config
    for part in parents:
        node = node.setdefault(part, {})
    node[leaf] = value


def get_setting(config: Dict[str, Any], dotted: str, default: Any = None) -> Any:
    """Looks up ``a.b.c`` in a nested config dictionary."""
    node: Any = config
    for part in dotted.split("."):
        if not isinstance(node, dict) or part not in node:
            return default
        node = node[part]
    return node


def apply_env_overrides(config: Dict[str, Any]) -> Dict[str, Any]:
    """Applies the SUBPERM_* environment variables on top of a loaded config."""
    for env_name, dotted in ENV_OVERRIDES.items():
        raw = os.environ.get(env_name)
        if raw is None or raw == "":
            continue
        try:
            _set_dotted(config, dotted, int(raw))
        except ValueError:
            logger.warning(f"Ignoring {env_name}={raw!r}: not an integer")
    return config


def load_config(config_path: Optional[str] = "config/config.yaml") -> Dict[str, Any]:
    """Loads the configuration from a YAML file, merged over the built-in defaults."""
    user_config: Dict[str, Any] = {}
    if config_path:
        try:
            with open(config_path, "r") as f:
                user_config = yaml.safe_load(f) or {}
        except FileNotFoundError:
            logger.warning(
                f"Configuration file '{config_path}' not found; using defaults. "
                "Copy 'config/config.example.yaml' to 'config/config.yaml' to customize."
            )
    return apply_env_overrides(_deep_merge(DEFAULT_CONFIG, user_config))


def oracle_ceiling(config: Optional[Dict[str, Any]] = None) -> int:
    """The largest size exhaustive oracles may enumerate."""
    if config is None:
        config = apply_env_overrides(copy.deepcopy(DEFAULT_CONFIG))
    return int(get_setting(config, "oracle.ceiling", 11))
