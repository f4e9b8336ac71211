"""
Domain models for Wodzicki residues and verification reports.

This module defines residue results, the η residue comparison, the errors
raised by residue functionals, and the pydantic verification report shared
by every check suite of the repository.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class OrderError(ValueError):
    """Raised when a symbol lacks the components a residue needs."""


class PreconditionError(ValueError):
    """Raised when an input violates a checked precondition; `defect` holds the measured violation."""

    def __init__(self, message: str, defect: Optional[float] = None):
        super().__init__(message)
        self.defect = defect


class Route(str, Enum):
    """How a residue was computed."""
    SPECTRAL = "spectral"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class ResidueResult:
    """A residue value with its error certificate; `generators` names the Q used by the spectral route."""

    value: complex
    route: Route
    k: int
    certificate: float
    generators: Optional[str] = None


@dataclass
class EtaResidueComparison:
    """
    Res^k_{z=σ} η(A, z) against residue densities of A.

    `candidates` holds every right-hand side computed; `matching` names those
    within tolerance of the left-hand side.
    """

    sigma: float
    k: int
    lhs: complex
    rhs: complex
    discrepancy: float
    candidates: Dict[str, complex] = field(default_factory=dict)
    matching: List[str] = field(default_factory=list)


def wire_number(value: Any) -> List[float]:
    """[re, im] pair of a scalar."""
    value = complex(value)
    return [float(value.real), float(value.imag)]


class CheckResult(BaseModel):
    """Outcome of one numerical check."""
    model_config = ConfigDict(populate_by_name=True)

    check: str = Field(..., description="Check name")
    lhs: List[float] = Field(..., description="Left-hand side as [re, im]")
    rhs: List[float] = Field(..., description="Right-hand side as [re, im]")
    tolerance: float = Field(..., gt=0, description="Accepted discrepancy")
    passed: bool = Field(..., alias="pass", description="Whether |lhs − rhs| ≤ tolerance")
    certificates: Dict[str, Any] = Field(default_factory=dict, description="Error estimates and witnesses")

    @classmethod
    def compare(cls, check: str, lhs: Any, rhs: Any, tolerance: float,
                certificates: Optional[Dict[str, Any]] = None) -> 'CheckResult':
        """Build a result from two scalars, recording the discrepancy."""
        discrepancy = abs(complex(lhs) - complex(rhs))
        certificates = dict(certificates or {})
        certificates.setdefault("discrepancy", discrepancy)
        return cls(check=check, lhs=wire_number(lhs), rhs=wire_number(rhs), tolerance=tolerance,
                   passed=bool(discrepancy <= tolerance), certificates=certificates)


class VerificationReport(BaseModel):
    """All checks of one suite run."""
    suite: str = Field(..., description="Suite name")
    checks: List[CheckResult] = Field(default_factory=list, description="Checks in declaration order")

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]
