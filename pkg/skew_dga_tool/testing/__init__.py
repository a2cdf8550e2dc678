"""
Testing utilities for the skew DGA tool.

Seeded generators of random q-matrices, rings, normal elements and DG
elements, plus brute-force oracles for property tests.
"""

from skew_dga_tool.testing.ring_generators import (
    QEntryKind, RingGenerator, brute_force_is_normal, quantum_complete_intersection
)

__all__ = [
    "QEntryKind",
    "RingGenerator",
    "brute_force_is_normal",
    "quantum_complete_intersection"
]
