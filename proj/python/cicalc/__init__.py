"""Exact invariants and moduli dimensions of complex complete intersections."""

from ._cicalc import (
    canonical_degrees,
    classify,
    compose,
    delta_closed_form,
    enumerate_multidegrees,
    family,
    find_collisions,
    invariant_profile,
    moduli_dimension,
    power_sums,
    total_degree,
    traving,
    verify_monotonicity,
    verify_paper,
)

__all__ = [
    "canonical_degrees",
    "classify",
    "compose",
    "delta_closed_form",
    "enumerate_multidegrees",
    "family",
    "find_collisions",
    "invariant_profile",
    "moduli_dimension",
    "power_sums",
    "total_degree",
    "traving",
    "verify_monotonicity",
    "verify_paper",
]
