"""Reference counters, the shifted-count reduction, the cp-IndSub identity and the clique gadget."""

from .counting import (
    CountingOracle,
    count_cliques,
    count_cp_hom,
    count_cp_indsub,
    count_hom,
    count_indsub,
    count_indsub_shifted,
    direct_oracle,
)
from .gadget import clique_gadget
from .identity import cp_hom_coefficients, top_coefficient, verify_cpindsub_identity

__all__ = [
    "CountingOracle",
    "clique_gadget",
    "count_cliques",
    "count_cp_hom",
    "count_cp_indsub",
    "count_hom",
    "count_indsub",
    "count_indsub_shifted",
    "cp_hom_coefficients",
    "direct_oracle",
    "top_coefficient",
    "verify_cpindsub_identity",
]
