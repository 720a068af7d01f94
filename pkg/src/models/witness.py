"""
Witness data models.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, PrivateAttr


class WitnessKind(str, Enum):
    """How a nonvanishing fixed point was found."""

    DUALITY = "duality"
    AVALANCHE_MINIMAL = "avalanche-minimal"
    SYLOW_BICLIQUE = "sylow-biclique"
    CONCENTRATED = "concentrated"


class CertificateKind(str, Enum):
    """Structural evidence for a treewidth lower bound."""

    REGULAR_DEGREE = "regular-degree"
    BICLIQUE = "biclique"
    EXACT_TREEWIDTH = "exact-treewidth"


class FixedPointRecord(BaseModel):
    """Serialized fixed point."""

    orbits: List[int] = Field(description="Orbit indices of the orbit factorization")
    level: int = Field(description="Number of orbits")
    edges: List[List[int]] = Field(description="Edge list of the fixed point")
    vertices: int = Field(description="Vertex count of the host")


class Certificate(BaseModel):
    """A machine-checked treewidth certificate."""

    kind: CertificateKind = Field(description="Certificate type")
    value: int = Field(description="Regular degree, biclique side size or exact treewidth")
    checked: bool = Field(default=False, description="Whether the certificate was re-verified")


class WitnessReport(BaseModel):
    """A nonvanishing fixed point together with its structural certificate."""

    kind: WitnessKind = Field(description="Search that produced the witness")
    group: str = Field(description="Acting group")
    p: int = Field(description="Residue modulus")
    fixed_point: FixedPointRecord = Field(description="The witness")
    residue: int = Field(description="Alternating enumerator mod p, nonzero")
    level: int = Field(description="Level of the witness")
    certificate: Certificate = Field(description="Treewidth certificate")
    claimed_treewidth_lower_bound: int = Field(description="Lower bound implied by the certificate")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Generating parameters")
    naive_value: Optional[str] = Field(
        default=None, description="Exact alternating enumerator, when re-derived naively"
    )
    exact_treewidth: Optional[int] = Field(
        default=None, description="Exact treewidth, when the witness is small enough"
    )


class EmbeddingRecord(BaseModel):
    """A small set B embedded into A by a field scaling."""

    b: List[str] = Field(description="The small difference set")
    scale: str = Field(description="Scaling factor λ")
    image: List[str] = Field(description="λ·B up to sign, a subset of A")


class AvalancheReport(BaseModel):
    """Outcome of the avalanche closure check."""

    finite_field: str = Field(description="Field, e.g. F_11")
    a: List[str] = Field(description="The satisfying difference set")
    bound: Optional[str] = Field(description="|F^+| / (|F^+| - |A|) as a fraction, absent when A = F^+")
    checked_sets: int = Field(default=0, description="Number of sets B below the bound that were checked")
    embeddings: List[EmbeddingRecord] = Field(
        default_factory=list, description="Per B: the scale and the embedded image inside A"
    )
    passed: bool = Field(description="Φ holds on C^B for every checked B")


class Verdict(str, Enum):
    TRIVIAL = "trivial"
    CONCENTRATED = "concentrated"
    SCATTERED = "scattered"


class KClassification(BaseModel):
    """Classification of an edge-monotone property at vertex count k."""

    k: int = Field(description="Vertex count")
    q: int = Field(description="Largest prime-power divisor of k")
    d: int = Field(description="Number of blocks, k / q")
    verdict: Verdict = Field(description="trivial, concentrated or scattered")
    failing_level: Optional[int] = Field(default=None, description="Minimal failing level")
    report: Optional[WitnessReport] = Field(default=None, description="Witness when concentrated")
    h_vertices: Optional[int] = Field(default=None, description="|V(H)| when scattered")
    h_edges: List[List[int]] = Field(default_factory=list, description="Edges of H when scattered")
    shifted_property: Optional[str] = Field(default=None, description="(Φ - H) when scattered")
    shifted_nontrivial: Optional[bool] = Field(
        default=None, description="(Φ - H) was checked nontrivial on q vertices"
    )

    _h_graph: Any = PrivateAttr(default=None)
    _shifted: Any = PrivateAttr(default=None)

    @property
    def h(self):
        """H as a Graph, when scattered."""
        return self._h_graph

    @property
    def shifted(self):
        """(Φ - H) as a PropertySpec, when scattered."""
        return self._shifted


class ScatteredProbeReport(BaseModel):
    """Serialized per-k scattered probe."""

    k: int = Field(description="Vertex count probed")
    m: int = Field(description="q(k)")
    h_vertices: int = Field(description="Vertex count of H_m")
    h_edges: List[List[int]] = Field(description="Edges of the lexicographically first H_m")
    shifted_property: str = Field(description="(Φ - H_m)")
