"""
Canonical trace service providing unified access to TRb.

This module provides the main public interface for the kernel difference
density, the canonical trace of symbols and model operators, spectral
traces of trace-class models, and the double residue of TRb on
holomorphic families.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from spectra.bridge import exact_symbol
from spectra.domain import SpectralOperator
from symbolcore.domain import ClassicalBisingularSymbol, Number

from .domain import FamilyResidue, FinitePartConfig, FinitePartValue
from .families import SymbolFamily, power_family, trb_family_residue
from .finite_part import kernel_difference_density, trb
from .spectral import spectral_trace

logger = logging.getLogger(__name__)


class CanonicalTraceService:
    """
    Main service for the canonical trace.

    TRb is defined on symbols whose orders are both non-integer; integer
    orders raise OrderError.
    """

    def __init__(self, config: Optional[FinitePartConfig] = None):
        """
        Initialize the canonical trace service.

        Args:
            config: Lattice cut-off and certification of finite parts
        """
        self.config = config or FinitePartConfig()

    def kernel_difference_density(self, a: ClassicalBisingularSymbol, n1: Optional[int] = None,
                                  n2: Optional[int] = None) -> np.ndarray:
        """Diagonal kernel density with (n1, n2) bihomogeneous terms subtracted, on the (θ₁, θ₂) grid."""
        return kernel_difference_density(a, n1, n2, self.config)

    def trb(self, a: ClassicalBisingularSymbol, depth: Optional[Tuple[int, int]] = None) -> FinitePartValue:
        """
        Canonical trace of Op(a).

        Raises:
            OrderError: If either order is an integer
        """
        return trb(a, depth, self.config)

    def trb_of_model(self, operator: SpectralOperator, depth: Optional[Tuple[int, int]] = None) -> FinitePartValue:
        """
        Canonical trace of a tensor of circle models through its exact symbol.

        Raises:
            NoTorusSymbolError: If the model has no symbol on the torus
        """
        return self.trb(exact_symbol(operator, depth))

    def spectral_trace(self, operator: SpectralOperator, terms: int = 10_000) -> Tuple[float, float]:
        """(trace, tail bound) from eigenvalue sums of a trace-class tensor model."""
        return spectral_trace(operator, terms)

    def trb_family_residue(self, family: SymbolFamily, z0: Number) -> FamilyResidue:
        """Double residue of TRb on a family against Wres² of its member at z0."""
        config = FinitePartConfig(cutoff=self.config.cutoff, halving=False)
        return trb_family_residue(family, z0, config=config)

    def power_family(self, shifts: Tuple[float, float], offsets: Tuple[float, float] = (0.0, 0.0)) -> SymbolFamily:
        return power_family(shifts, offsets)
