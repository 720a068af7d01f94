"""
Building and machine-checking witness reports.
"""

from typing import Any, Dict, Optional

from loguru import logger

from src.config.settings import settings
from src.core.errors import FalsifiedLemmaError
from src.enumerators.naive import alt_enum_naive
from src.graphs.structure import BicliqueSides, contains_biclique, regular_degree, treewidth_exact
from src.groups.orbits import FixedPoint
from src.models.witness import (
    Certificate,
    CertificateKind,
    FixedPointRecord,
    WitnessKind,
    WitnessReport,
)
from src.properties.handle import PropertyHandle


def fixed_point_record(point: FixedPoint) -> FixedPointRecord:
    data = point.to_json()
    return FixedPointRecord(vertices=point.host.n, **data)


def regular_certificate(point: FixedPoint, expected: int) -> Certificate:
    """
    Raises:
        FalsifiedLemmaError: the witness is not expected-regular
    """
    degree = regular_degree(point.graph)
    if degree != expected:
        raise FalsifiedLemmaError(f"witness should be {expected}-regular, found degree {degree}")
    return Certificate(kind=CertificateKind.REGULAR_DEGREE, value=degree, checked=True)


def biclique_certificate(point: FixedPoint, a: int, sides: Optional[BicliqueSides]) -> Certificate:
    """
    Raises:
        FalsifiedLemmaError: the witness does not contain K_{a,a}
    """
    if not contains_biclique(point.graph, a, sides):
        raise FalsifiedLemmaError(f"witness does not contain K_{{{a},{a}}}")
    return Certificate(kind=CertificateKind.BICLIQUE, value=a, checked=True)


def build_report(
    kind: WitnessKind,
    handle: PropertyHandle,
    point: FixedPoint,
    residue: int,
    p: int,
    group_name: str,
    certificate: Certificate,
    parameters: Dict[str, Any],
    verify: bool = False,
) -> WitnessReport:
    """
    Assemble a WitnessReport. With verify, the residue is re-derived by the naive
    engine when the witness is small enough, and exact treewidth is compared
    with the certified lower bound.

    Raises:
        FalsifiedLemmaError: a zero residue, or a failed cross-check
    """
    if residue % p == 0:
        raise FalsifiedLemmaError(f"{kind.value} witness has residue 0 mod {p}")
    report = WitnessReport(
        kind=kind,
        group=group_name,
        p=p,
        fixed_point=fixed_point_record(point),
        residue=residue,
        level=point.level,
        certificate=certificate,
        claimed_treewidth_lower_bound=certificate.value,
        parameters=parameters,
    )
    if not verify:
        return report

    g = point.graph
    if g.m <= settings.max_edges_naive:
        naive = alt_enum_naive(handle, g)
        if naive % p != residue % p:
            raise FalsifiedLemmaError(
                f"naive alternating enumerator {naive} disagrees with residue {residue} mod {p}"
            )
        report.naive_value = str(naive)
    else:
        logger.info(f"Witness has {g.m} edges; naive cross-check skipped")
    if g.n <= settings.max_tw_n:
        treewidth = treewidth_exact(g)
        if treewidth < report.claimed_treewidth_lower_bound:
            raise FalsifiedLemmaError(
                f"exact treewidth {treewidth} is below the certified bound {report.claimed_treewidth_lower_bound}"
            )
        report.exact_treewidth = treewidth
    return report
