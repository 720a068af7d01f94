"""
Avalanche closure: once Φ holds on C^A, it holds on C^B for every small enough B.
"""

from itertools import combinations
from math import comb
from typing import Iterable

from loguru import logger

from src.config.settings import settings
from src.core.errors import FalsifiedLemmaError, HypothesisError, ensure_capacity
from src.fields.gf import FieldSpec, coerce_subset, format_subset, plus_set
from src.groups.families import difference_graph, embed_small_set, small_set_bound
from src.models.witness import AvalancheReport, EmbeddingRecord
from src.properties.checks import PropertyLike, as_handle


def avalanche_closure(prop: PropertyLike, spec: FieldSpec, a: Iterable) -> AvalancheReport:
    """
    Verify Φ(C^B) = 1 for every B ⊆ F^+ with |B| < |F^+| / (|F^+| - |A|).

    Each B is also embedded into A by a field scaling, which is what makes
    C^B isomorphic to an edge-subgraph of C^A.

    Raises:
        HypothesisError: Φ is not verified edge-monotone, Φ(C^A) = 0, or A = F^+
        FalsifiedLemmaError: some B below the bound fails Φ or has no embedding
    """
    handle = as_handle(prop)
    handle.require_edge_monotone()
    subset_a = coerce_subset(spec, a)
    if not handle.evaluate(difference_graph(spec, subset_a)):
        raise HypothesisError(f"Φ fails on C^A for A = {format_subset(subset_a)}")
    bound = small_set_bound(spec, len(subset_a))
    if bound is None:
        raise HypothesisError("A must be a proper subset of F^+")

    plus = plus_set(spec)
    sizes = [size for size in range(len(plus) + 1) if size < bound]
    ensure_capacity(sum(comb(len(plus), size) for size in sizes), settings.max_subsets, "avalanche subset count")

    embeddings = []
    checked = 0
    for size in sizes:
        for b in combinations(plus, size):
            embedding = embed_small_set(subset_a, b, spec)
            if not embedding.found:
                raise FalsifiedLemmaError(
                    f"no scaling embeds {format_subset(b)} into {format_subset(subset_a)} over {spec}"
                )
            if not handle.evaluate(difference_graph(spec, b)):
                raise FalsifiedLemmaError(
                    f"Φ fails on C^B for B = {format_subset(b)} below the avalanche bound {bound}"
                )
            embeddings.append(
                EmbeddingRecord(
                    b=format_subset(b),
                    scale=str(embedding.scale),
                    image=format_subset(embedding.image),
                )
            )
            checked += 1
    logger.info(f"Avalanche closure over {spec}: {checked} sets below {bound} satisfy Φ")
    return AvalancheReport(
        finite_field=str(spec),
        a=format_subset(subset_a),
        bound=str(bound),
        checked_sets=checked,
        embeddings=embeddings,
        passed=True,
    )
