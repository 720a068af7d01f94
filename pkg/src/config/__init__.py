"""Configuration module initialization."""

from .config_manager import ConfigManager
from .run_config import Caps, Command, GroupChoice, OutputFormat, RunConfig, WitnessMode
from .settings import IndsubSettings, settings

__all__ = [
    "Caps",
    "Command",
    "ConfigManager",
    "GroupChoice",
    "IndsubSettings",
    "OutputFormat",
    "RunConfig",
    "WitnessMode",
    "settings",
]
