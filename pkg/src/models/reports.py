"""
Report models for the engines, counters and verification suites.
"""

from datetime import datetime
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class AltEnumReport(BaseModel):
    """Both alternating-enumerator engines on one graph."""

    naive: Optional[str] = Field(default=None, description="Exact value as a decimal string")
    mod_p: Optional[int] = Field(default=None, description="Fixed-point engine residue")
    p: Optional[int] = Field(default=None, description="Residue modulus")
    level: Optional[int] = Field(default=None, description="Level of the graph as a fixed point")
    consistent: Optional[bool] = Field(
        default=None, description="naive mod p equals the fixed-point residue"
    )


class LatticeRow(BaseModel):
    """One fixed point of a lattice dump."""

    level: int
    orbit_set: int
    edge_count: int
    phi: int
    residue: int


class LatticeSummary(BaseModel):
    """Fixed-point lattice overview with its level vectors."""

    group: str = Field(description="Acting group")
    host_vertices: int = Field(description="Host vertex count")
    orbit_count: int = Field(description="Number of edge orbits")
    orbit_sizes: List[int] = Field(description="Sizes of the orbits, by index")
    level_counts: List[int] = Field(description="Number of fixed points per level")
    p: int = Field(description="Residue modulus")
    w: List[int] = Field(description="Φ-count per level mod p")
    w_hat: List[int] = Field(description="Alternating enumerator sum per level mod p")
    duality_holds: bool = Field(description="ŵ ≡ C_n w (mod p)")
    rows: List[LatticeRow] = Field(default_factory=list, description="Per-point rows")


class CountMethod(str, Enum):
    DIRECT = "direct"
    REDUCTION = "reduction"


class CountResult(BaseModel):
    """An exact count. Serialized as a decimal string so large values survive."""

    value: int = Field(ge=0, description="Exact count")
    method: CountMethod = Field(default=CountMethod.DIRECT, description="How the count was obtained")

    def to_json_dict(self) -> dict:
        return {"count": str(self.value), "method": self.method.value}


class CriterionResult(BaseModel):
    """Outcome of one verification criterion."""

    name: str = Field(description="Criterion name")
    passed: bool = Field(description="Whether every instance passed")
    instances: int = Field(default=0, description="Number of instances checked")
    detail: Optional[str] = Field(default=None, description="Failure detail or summary")
    seconds: float = Field(default=0.0, description="Wall-clock time")


class VerificationSummary(BaseModel):
    """All criteria of one verify run."""

    started_at: datetime = Field(default_factory=datetime.utcnow, description="Run start")
    scale: str = Field(description="quick or full")
    results: List[CriterionResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failed(self) -> List[str]:
        return [result.name for result in self.results if not result.passed]
