"""
Domain models for the canonical trace.

This module defines the finite-part configuration, finite-part values with
their certificates, and the record of the residue relation between the
canonical trace of a holomorphic family and Wres².
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple


@dataclass
class FinitePartConfig:
    """Lattice cut-off and certification of finite-part sums."""
    cutoff: int = 256            # frequencies |l| ≤ L are summed exactly
    halving: bool = True         # certify by comparing L against L/2
    certificate_floor: float = 1e-15

    def __post_init__(self):
        if self.cutoff < 16:
            raise ValueError(f"Lattice cut-off must be at least 16, got {self.cutoff}")


@dataclass(frozen=True)
class FinitePartValue:
    """
    A canonical trace value.

    `subtracted_terms` is the (N1, N2) of the bihomogeneous terms removed
    from the symbol before summing; `certificate` bounds the change of
    `value` when more terms are subtracted or the cut-off grows.
    """

    value: complex
    subtracted_terms: Tuple[int, int]
    certificate: float


@dataclass
class FamilyResidue:
    """
    Double residue of z ↦ TRb(A(z)) at z0 against Wres²(A(z0)).

    `chart` maps each candidate relation to its discrepancy; `sign` is the
    ±1 of the relation residue = sign·Wres² that matched.
    """

    z0: complex
    residue: complex
    wres2: complex
    sign: int
    discrepancy: float
    error_bound: float
    chart: Dict[str, float] = field(default_factory=dict)

    def as_pair(self) -> Tuple[complex, complex]:
        return self.residue, self.wres2
