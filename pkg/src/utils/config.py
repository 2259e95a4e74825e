import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from src.utils.errors import ParseError

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "config" / "verification_config.yaml"

DEFAULTS: Dict[str, Any] = {
    "limits": {
        "q_cap": 343,
        "hermite_q_cap": 169,
        "exact_binomial_limit": 4096,
    },
    "scan": {
        "workers": 1,
        "progress": True,
    },
    "theorems": {
        "thm3.1": {"p_list": [5, 7, 11, 13], "e_max": 2, "l_max": None},
        "thm4.1": {"p_list": [3], "e_max": 4, "l_max": None},
        "result1": {"p_list": [5, 7, 11, 13], "e_max": 2, "l_max": None},
        "result2": {"p_list": [5, 7, 11, 13], "e_max": 2, "l_max": None},
        "result3": {"p_list": [5, 7, 11, 13], "e_max": 2, "l_max": None},
        "result4": {"p_list": [5, 7, 11, 13], "e_max": 2, "l_max": None},
    },
    "oracles": {
        "seed": 20240611,
        "hermite_random_samples": 500,
        "zieve_samples": 50,
        "zieve_max_r": 6,
    },
    "output": {
        "format": None,
        "output_dir": "results/",
    },
}


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """Load the YAML config and merge it over the built-in defaults.

    An explicit path must exist; the default path is optional.
    """
    if config_path is None:
        path = Path(os.environ.get("DICKSON_WORKBENCH_CONFIG", DEFAULT_CONFIG_PATH))
        if not path.exists():
            return copy.deepcopy(DEFAULTS)
    else:
        path = Path(config_path)
        if not path.exists():
            raise ParseError(f"config file not found: {config_path}")
    with open(path, "r") as f:
        loaded = yaml.safe_load(f) or {}
    if not isinstance(loaded, dict):
        raise ParseError(f"config file {path} must hold a mapping at top level")
    return _deep_merge(DEFAULTS, loaded)
