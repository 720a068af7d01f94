"""Witness searches: avalanche closure, prime-power and Sylow witnesses, k-classification."""

from .arithmetic import prime_power_bound_holds, prime_power_parts, q_largest_prime_power
from .avalanche import avalanche_closure
from .classification import ScatteredProbe, classify_k, scattered_property_probe
from .prime_power import prime_power_witness
from .sylow import check_pushdown_soundness, sylow_biclique_witness

__all__ = [
    "ScatteredProbe",
    "avalanche_closure",
    "check_pushdown_soundness",
    "classify_k",
    "prime_power_bound_holds",
    "prime_power_parts",
    "prime_power_witness",
    "q_largest_prime_power",
    "scattered_property_probe",
    "sylow_biclique_witness",
]
