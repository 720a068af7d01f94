"""
Configuration manager for indsub run profiles
Loads and saves RunConfig objects as YAML
"""

from pathlib import Path
from typing import Optional, Union

import yaml
from loguru import logger

from src.config.run_config import RunConfig
from src.core.errors import InputError


class ConfigManager:
    """Manages YAML run profiles (default location ~/.indsub/run.yml)"""

    def __init__(self, config_file: Optional[Union[str, Path]] = None):
        self.config_file = Path(config_file) if config_file else Path.home() / ".indsub" / "run.yml"

    def exists(self) -> bool:
        """Check if the profile file exists"""
        return self.config_file.exists()

    def load(self) -> RunConfig:
        """
        Raises:
            InputError: missing file, malformed YAML or invalid profile
        """
        try:
            with open(self.config_file, "r") as f:
                data = yaml.safe_load(f) or {}
        except OSError as e:
            raise InputError(f"cannot read run profile {self.config_file}: {e}") from e
        except yaml.YAMLError as e:
            raise InputError(f"run profile {self.config_file} is not valid YAML: {e}") from e
        if not isinstance(data, dict):
            raise InputError(f"run profile {self.config_file} must be a mapping")
        logger.debug(f"Loaded run profile from {self.config_file}")
        return RunConfig.from_dict(data)

    def save(self, config: RunConfig) -> None:
        """Save the profile, creating its directory if needed"""
        self.config_file.parent.mkdir(parents=True, exist_ok=True)
        with open(self.config_file, "w") as f:
            yaml.safe_dump(config.to_dict(), f, default_flow_style=False, sort_keys=False)
        logger.info(f"Run profile saved to {self.config_file}")

    def merge(self, profile: RunConfig, overrides: dict) -> RunConfig:
        """Profile values overridden by every non-None entry of overrides"""
        data = profile.to_dict()
        for key, value in overrides.items():
            if key == "caps" and isinstance(value, dict):
                data["caps"].update({name: cap for name, cap in value.items() if cap is not None})
            elif value is not None:
                data[key] = value
        return RunConfig.from_dict(data)
