"""Observation networks, the two-observation entropy NAND gate, and friends."""

from .core import (
    Element,
    ObservationEdge,
    ObservationNetwork,
    binary_entropy,
    dissipate_to_environment,
    element_entropy,
    landauer_energy,
    observe,
    transition_profile,
)
from .gates import GateReadout, build_gate_network, evaluate, gate_entropies, search_reachable_tables
from .patterns import PatternClass, are_isomorphic, canonical_form, classify_pattern, enumerate_patterns

__version__ = "0.1.0"
