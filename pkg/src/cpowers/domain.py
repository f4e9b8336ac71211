"""
Domain models for complex powers and the holomorphic functional calculus.

This module defines integration contours, the results of contour integrals
and resolvent bounds, complex powers of symbols, and the errors raised when
a contour or an operator violates the assumptions of the construction.
"""

from dataclasses import dataclass, field
from enum import Enum
import math
from typing import Any, Dict, List, Optional

from spectra.domain import SpectralOperator
from symbolcore.domain import BiOrder, ClassicalBisingularSymbol, Number, Sector


class GeometryError(ValueError):
    """Raised when a contour meets the point, the spectrum or the branch cut it must avoid."""


class AssumptionError(ValueError):
    """Raised when an operator violates the ellipticity or invertibility assumptions of A^z."""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.witness = witness


class ContourKind(str, Enum):
    """Shapes of integration contours."""
    KEYHOLE = "keyhole"
    CIRCLE = "circle"


@dataclass(frozen=True)
class Contour:
    """
    Integration contour.

    A keyhole contour is the positively oriented boundary of the sector Λ
    with its ε-disc; the branch cut of λ^z runs along the sector axis. A
    circle contour is oriented so that enclosed points are encircled
    clockwise, matching the keyhole convention; its branch cut is the
    negative real axis.
    """

    kind: ContourKind
    nodes: int = 64
    sector: Optional[Sector] = None
    center: complex = 0j
    radius: float = 1.0

    def __post_init__(self):
        if self.nodes < 64:
            raise ValueError(f"Contours need at least 64 nodes, got {self.nodes}")
        if self.kind == ContourKind.KEYHOLE and self.sector is None:
            raise ValueError("Keyhole contours need a sector")
        if self.kind == ContourKind.CIRCLE and not self.radius > 0:
            raise ValueError(f"Circle radius must be positive, got {self.radius}")

    @property
    def branch_axis(self) -> float:
        """Direction of the branch cut of λ^z."""
        return self.sector.axis_angle if self.kind == ContourKind.KEYHOLE else math.pi

    @classmethod
    def keyhole(cls, sector: Optional[Sector] = None, nodes: int = 64) -> 'Contour':
        return cls(kind=ContourKind.KEYHOLE, nodes=nodes, sector=sector or Sector.left_half_plane())

    @classmethod
    def circle(cls, center: Number, radius: float, nodes: int = 64) -> 'Contour':
        return cls(kind=ContourKind.CIRCLE, nodes=nodes, center=complex(center), radius=float(radius))


@dataclass(frozen=True)
class ContourIntegral:
    """A contour integral with the distance kept from every singularity and a quadrature error estimate."""

    value: complex
    margin: float
    error: float
    reduction: int = 0


@dataclass(frozen=True)
class ResolventBound:
    """
    Sampled constant C of |(λ − a)^{−1}|·(|λ| + 1) on the cospheres.

    `coarse` is the constant on the unrefined λ grid; `passed` requires a
    finite C that moves by at most 10% under refinement.
    """

    constant: float
    coarse: float
    passed: bool


@dataclass(frozen=True)
class ComplexPower:
    """
    Symbol of A^z.

    The components of `symbol` have the z-dependent bi-degrees
    (m₁z − j, m₂z − k) with m = `base_order`. `certificate` is the largest
    deviation of the contour-integrated Cauchy kernels from their closed
    forms; `reduction` is the k of A^z = A^{z−k}∘A^k.
    """

    symbol: ClassicalBisingularSymbol
    z: complex
    base_order: BiOrder
    certificate: float
    reduction: int = 0


@dataclass
class HolomorphicImage:
    """f(A) on an enumerated spectrum prefix with its cross-check against direct evaluation."""

    operator: SpectralOperator
    values: List[complex] = field(default_factory=list)
    direct: List[complex] = field(default_factory=list)
    error: float = 0.0
