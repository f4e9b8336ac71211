"""
Domain models for meromorphic continuation of spectral functions.

This module defines Laurent expansions, pole reports (in-memory and wire
format), chart and cut-direction vocabularies, numerical configuration
and the errors raised at poles.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class Chart(str, Enum):
    """Variable convention of a zeta function: Tr A^z or Tr A^{−z}."""
    A_Z = "A^z"
    A_MINUS_Z = "A^-z"


class Direction(str, Enum):
    """Spectral cut above (up) or below (down) the real axis."""
    UP = "up"
    DOWN = "down"


class SpectralFunction(str, Enum):
    """Spectral functions that pole tables and value tables can evaluate."""
    ZETA = "zeta"
    ETA = "eta"
    ZETA_UP = "zeta_up"
    ZETA_DOWN = "zeta_down"


@dataclass
class HurwitzConfig:
    """Euler–Maclaurin parameters for ζ_H(s, a)."""
    base_head: int = 16         # head length N = base_head + ceil|s|
    bernoulli_terms: int = 16   # Bernoulli corrections M
    guard_digits: int = 20      # working digits above the cancellation estimate


@dataclass
class LaurentConfig:
    """Contour quadrature parameters for Laurent coefficients."""
    nodes: int = 64             # trapezoidal nodes, at least 64
    max_radius: float = 0.5     # cap on the default contour radius
    max_positive: int = 4       # highest regular coefficient extracted
    pole_tolerance: float = 1e-8


@dataclass
class LaurentExpansion:
    """
    Laurent coefficients c_j of f around `center`, for j = −2..M.

    `error_bound` compares extractions at radius r and r/2.
    """

    center: complex
    coefficients: Dict[int, complex] = field(default_factory=dict)
    error_bound: float = 0.0
    radius: float = 0.0

    def coefficient(self, j: int) -> complex:
        return self.coefficients.get(j, 0.0 + 0.0j)

    def residue(self, k: int = 1) -> complex:
        """Res^k: the coefficient of (z − z0)^{−k}."""
        if k not in (1, 2):
            raise ValueError(f"Residue order must be 1 or 2, got {k}")
        return self.coefficient(-k)

    def pole_order(self, tol: float = 1e-8) -> int:
        if abs(self.coefficient(-2)) > tol:
            return 2
        if abs(self.coefficient(-1)) > tol:
            return 1
        return 0


class PoleError(ValueError):
    """Raised when a spectral function is evaluated at one of its poles."""

    def __init__(self, message: str, laurent: Optional[LaurentExpansion] = None):
        super().__init__(message)
        self.laurent = laurent


class UnsupportedModelError(ValueError):
    """Raised when no closed-form continuation exists for the given models."""


@dataclass(frozen=True)
class PoleEntry:
    """A detected pole with its two most singular Laurent coefficients."""

    location: complex
    order: int
    c_minus2: complex
    c_minus1: complex
    error_bound: float = 0.0


@dataclass
class PoleReport:
    """Poles of a spectral function inside a window, in one chart."""

    chart: Chart
    entries: List[PoleEntry] = field(default_factory=list)
    function: SpectralFunction = SpectralFunction.ZETA
    candidates: List[complex] = field(default_factory=list)


class PoleEntryRecord(BaseModel):
    """Wire format of a pole entry."""
    z: List[float] = Field(..., description="Pole location [re, im]")
    order: int = Field(..., ge=1, le=2, description="Pole order")
    c2: List[float] = Field(..., description="Coefficient of (z − z0)^-2 as [re, im]")
    c1: List[float] = Field(..., description="Coefficient of (z − z0)^-1 as [re, im]")


class PoleReportRecord(BaseModel):
    """Wire format of a pole report."""
    chart: Chart = Field(..., description="Variable convention")
    entries: List[PoleEntryRecord] = Field(default_factory=list, description="Detected poles")


@dataclass
class ResidueIdentityResult:
    """
    Residues entering the η residue identity at one point.

    `wres_value` is None when the model has no symbol bridge; `cut_residue`
    is None away from z = 0.
    """

    point: complex
    k: int
    eta_residue: complex
    cut_residue: Optional[complex]
    wres_value: Optional[complex]
    discrepancy: float
    bridged: bool
