"""Read the reslat configuration."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import glob
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import toml

from reslat.exceptions import ReslatException

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = "Reslat.toml"
MAX_BRUTE_VARIABLE = "RESLAT_MAX_BRUTE"


class InvalidIncludeException(ReslatException):
    """Raised when the include configuration is invalid."""

    def __init__(self, message: str):
        ReslatException.__init__(self, f"invalid include: {message}")


def from_toml(path, required: bool = True) -> Dict[str, Any]:
    """Read the configuration from a TOML file, processing includes.

    A missing file yields an empty configuration unless it is required.
    """
    if not required and not Path(path).exists():
        logger.debug("no configuration file at %s", path)
        return {}
    config = _read_toml(path)
    for include_options in config.get("include", []):
        if "glob" not in include_options:
            raise InvalidIncludeException('"glob" is required')
        for include_path in sorted(glob.glob(include_options["glob"])):
            include_config = _read_toml(include_path)
            merge_fragment(config, include_config)
    return config


def merge_fragment(config: Dict, fragment: Dict):
    """Merge a configuration fragment into the main configuration.

    This extends lists and updates dictionaries two levels deep.
    """
    for k, v in fragment.items():
        if k not in config:
            config[k] = v
        elif isinstance(config[k], list):
            config[k].extend(v)
        elif isinstance(config[k], dict):
            _update_dict(config[k], v)
        else:
            config[k] = v


def _update_dict(existing: Dict, new: Dict):
    for k, v in new.items():
        if k in existing and isinstance(existing[k], dict):
            existing[k].update(v)
        else:
            existing[k] = v


def _read_toml(path):
    try:
        return toml.load(path)
    except Exception as err:
        logger.error("error in %s", path)
        raise err


@dataclass
class Settings:
    """Search bounds and worker counts taken from the configuration."""

    oracle_max_size: int = 6
    congruence_max_size: int = 7
    jobs: int = 1

    @classmethod
    def from_config(
        cls, config: Dict[str, Any], environ: Optional[Mapping[str, str]] = None
    ) -> "Settings":
        """Read the settings from a configuration dictionary.

        The RESLAT_MAX_BRUTE environment variable overrides [oracle] max_size.
        """
        if environ is None:
            environ = os.environ
        settings = cls()
        if "oracle" in config and "max_size" in config["oracle"]:
            settings.oracle_max_size = int(config["oracle"]["max_size"])
        if "congruences" in config and "max_size" in config["congruences"]:
            settings.congruence_max_size = int(config["congruences"]["max_size"])
        if "workers" in config and "jobs" in config["workers"]:
            settings.jobs = int(config["workers"]["jobs"])
        if MAX_BRUTE_VARIABLE in environ:
            settings.oracle_max_size = int(environ[MAX_BRUTE_VARIABLE])
        return settings
