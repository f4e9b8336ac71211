"""
Power service providing unified access to complex powers.

This module provides the main public interface for contour integrals of
λ^z, complex powers and sign operators of classical bisingular symbols,
resolvent bounds, and the holomorphic functional calculus of models.
"""

import logging
from typing import Callable, Optional, Tuple

import numpy as np

from spectra.domain import SpectralOperator
from symbolcore.domain import ClassicalBisingularSymbol, Number, Sector

from . import powers
from .contours import contour_power
from .domain import ComplexPower, Contour, ContourIntegral, HolomorphicImage, ResolventBound
from .functional import holomorphic_image

logger = logging.getLogger(__name__)

CROSS_CHECK_TOLERANCE = 1e-10


class PowerService:
    """
    Main service for complex powers.

    Contour integrals use 1/(2πi) with the positively oriented boundary of
    Λ_ε, which encircles the spectrum clockwise.
    """

    def __init__(self, nodes: int = 64):
        """
        Initialize the power service.

        Args:
            nodes: Trapezoidal nodes for circle contours and Cauchy kernels
        """
        self.nodes = nodes

    def resolvent_bound_check(self, a: ClassicalBisingularSymbol, sector: Sector) -> Tuple[float, bool]:
        """
        Sampled resolvent constant C and whether it is finite and stable under refinement.

        Returns:
            (C, passed)
        """
        result = self.resolvent_bound(a, sector)
        return result.constant, result.passed

    def resolvent_bound(self, a: ClassicalBisingularSymbol, sector: Sector) -> ResolventBound:
        return powers.resolvent_bound_check(a, sector)

    def contour_power_scalar(self, p: Number, z: Number, contour: Optional[Contour] = None) -> complex:
        """
        p^z by contour integration, principal branch for the default keyhole.

        Args:
            p: Point enclosed by the contour
            z: Exponent
            contour: Keyhole around the left half-plane unless given

        Raises:
            GeometryError: If p lies on the contour or is not enclosed
        """
        return self.contour_integral(p, z, contour).value

    def contour_integral(self, p: Number, z: Number, contour: Optional[Contour] = None) -> ContourIntegral:
        """p^z with the contour margin and quadrature error."""
        return contour_power(p, z, contour or Contour.keyhole(nodes=self.nodes))

    def complex_power_symbol(self, a: ClassicalBisingularSymbol, z: Number,
                             depth: Optional[Tuple[int, int]] = None,
                             sector: Optional[Sector] = None) -> ClassicalBisingularSymbol:
        """
        Symbol of A^z of bi-order (m₁z, m₂z).

        Raises:
            AssumptionError: If A is not Λ-elliptic or not invertible
        """
        return self.complex_power(a, z, depth, sector).symbol

    def complex_power(self, a: ClassicalBisingularSymbol, z: Number, depth: Optional[Tuple[int, int]] = None,
                      sector: Optional[Sector] = None) -> ComplexPower:
        return powers.complex_power(a, z, depth, sector, nodes=self.nodes)

    def sign_operator_symbol(self, a: ClassicalBisingularSymbol) -> ClassicalBisingularSymbol:
        """
        Symbol of F = A(A²)^{−1/2} for self-adjoint A.

        Raises:
            AssumptionError: If A is not self-adjoint or its leading symbol is not real and nonvanishing
        """
        return powers.sign_operator_symbol(a, nodes=self.nodes)

    def sign_square_defect(self, sign: ClassicalBisingularSymbol) -> float:
        return powers.sign_square_defect(sign)

    def holomorphic_calculus(self, f: Callable[[np.ndarray], np.ndarray], operator: SpectralOperator,
                             count: int = 100, contour: Optional[Contour] = None) -> SpectralOperator:
        """
        Explicit model f(A) on the first `count` distinct eigenvalues.

        Raises:
            GeometryError: If the contour misses an eigenvalue
        """
        image = self.holomorphic_image(f, operator, count, contour)
        if image.error > CROSS_CHECK_TOLERANCE:
            logger.warning(f"Contour and direct evaluation of f on {operator.label()} "
                           f"differ by {image.error:.2e}")
        return image.operator

    def holomorphic_image(self, f: Callable[[np.ndarray], np.ndarray], operator: SpectralOperator,
                          count: int = 100, contour: Optional[Contour] = None) -> HolomorphicImage:
        return holomorphic_image(f, operator, count, contour, nodes=self.nodes)
