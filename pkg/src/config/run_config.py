"""
Run configuration for the indsub CLI
"""

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import List, Optional

from src.config.settings import (
    HARD_MAX_EDGES_NAIVE,
    HARD_MAX_ORBITS,
    HARD_MAX_TW_N,
    IndsubSettings,
    settings,
)
from src.core.errors import InputError


class Command(str, Enum):
    AE = "ae"
    LATTICE = "lattice"
    WITNESS = "witness"
    REDUCE = "reduce"
    GADGET = "gadget"
    VERIFY = "verify"


class WitnessMode(str, Enum):
    PRIME_POWER = "prime-power"
    SYLOW = "sylow"
    CLASSIFY = "classify"
    PROBE = "probe"
    AVALANCHE = "avalanche"


class GroupChoice(str, Enum):
    ROTATION = "rotation"
    SYLOW = "sylow"
    PRODUCT = "product"
    TRIVIAL = "trivial"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    PRETTY = "pretty"


@dataclass
class Caps:
    """
    Caps a run sets on top of the environment settings. None keeps the settings
    value; a set cap must stay within its hard limit.
    """

    max_edges_naive: Optional[int] = None
    max_orbits: Optional[int] = None
    max_tw_n: Optional[int] = None

    def validate(self) -> None:
        limits = {
            "max_edges_naive": HARD_MAX_EDGES_NAIVE,
            "max_orbits": HARD_MAX_ORBITS,
            "max_tw_n": HARD_MAX_TW_N,
        }
        for name, limit in limits.items():
            value = getattr(self, name)
            if value is not None and not 0 <= value <= limit:
                raise InputError(f"cap {name}={value} outside the hard limit 0..{limit}")


@dataclass
class RunConfig:
    """One CLI invocation, as parsed from flags or replayed from a YAML profile"""

    command: Command = Command.VERIFY
    property_source: Optional[str] = None  # built-in name, file or inline DSL text
    p: Optional[int] = None
    m: int = 1
    d: int = 1
    k: Optional[int] = None
    ell: Optional[int] = None
    graph_file: Optional[str] = None
    f_file: Optional[str] = None
    h_file: Optional[str] = None
    group: GroupChoice = GroupChoice.ROTATION
    witness: WitnessMode = WitnessMode.PRIME_POWER
    subset: List[str] = field(default_factory=list)
    caps: Caps = field(default_factory=Caps)
    output: OutputFormat = OutputFormat.JSON
    verify: bool = False
    full: bool = False
    check_pushdown: bool = False
    suites: List[str] = field(default_factory=list)

    def get_missing_fields(self) -> List[str]:
        """Fields the command needs but the run does not set"""
        needed = {
            Command.AE: ["property_source", "graph_file"],
            Command.LATTICE: ["p"],
            Command.REDUCE: ["property_source", "graph_file", "h_file", "k"],
            Command.GADGET: ["f_file", "graph_file", "ell"],
            Command.VERIFY: [],
        }
        if self.command is Command.WITNESS:
            required = ["property_source"]
            if self.witness is WitnessMode.CLASSIFY or self.witness is WitnessMode.PROBE:
                required.append("k")
            else:
                required.append("p")
            if self.witness is WitnessMode.AVALANCHE:
                required.append("subset")
        else:
            required = needed[self.command]
        return [name for name in required if getattr(self, name) in (None, [])]

    def validate(self) -> None:
        """
        Raises:
            InputError: a required field is missing or a cap exceeds its hard limit
        """
        missing = self.get_missing_fields()
        if missing:
            raise InputError(f"'{self.command.value}' needs {', '.join(missing)}")
        self.caps.validate()

    def apply_caps(self, target: Optional[IndsubSettings] = None) -> IndsubSettings:
        """Push the run's caps into target (the global settings by default)."""
        self.caps.validate()
        target = settings if target is None else target
        for name, value in asdict(self.caps).items():
            if value is not None:
                setattr(target, name, value)
        return target

    def to_dict(self) -> dict:
        """Convert to a plain dictionary for YAML serialization"""
        data = asdict(self)
        for name in ("command", "group", "witness", "output"):
            data[name] = getattr(self, name).value
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        """
        Raises:
            InputError: unknown keys or invalid enum values
        """
        values = dict(data)
        try:
            if "caps" in values and values["caps"] is not None:
                values["caps"] = Caps(**values["caps"])
            for name, enum in (
                ("command", Command),
                ("group", GroupChoice),
                ("witness", WitnessMode),
                ("output", OutputFormat),
            ):
                if name in values and values[name] is not None:
                    values[name] = enum(values[name])
            return cls(**values)
        except (TypeError, ValueError) as e:
            raise InputError(f"invalid run profile: {e}") from e
