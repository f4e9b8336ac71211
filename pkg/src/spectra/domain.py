"""
Domain models for model operators with explicitly enumerable spectra.

This module defines the operator descriptors (wire format and in-memory
form), spectral data, and the errors raised by model construction and
spectral decompositions.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, Field

from symbolcore.domain import BiOrder, ModelGeometry


class ModelError(ValueError):
    """Raised when model parameters are invalid for the requested kind."""


class NonInvertibleModelError(ModelError):
    """Raised when a model that must be invertible has zero in its spectrum."""


class KernelError(ModelError):
    """Raised by sign decompositions of operators with a kernel."""


class NoTorusSymbolError(ModelError):
    """Raised when a model has no Fourier-multiplier symbol on the circle × circle model."""


class EnumerationError(ModelError):
    """Raised when a spectrum cannot be listed in nondecreasing |value| order."""


class ModelKind(str, Enum):
    """Kinds of model operators."""
    CIRCLE_DIRAC = "circle_dirac"
    ABS_CIRCLE_DIRAC = "abs_circle_dirac"
    TORUS_LAPLACIAN_SHIFT = "torus_laplacian_shift"
    HARMONIC_OSCILLATOR = "harmonic_oscillator"
    TENSOR = "tensor"
    FINITE_RANK_PROJECTION = "finite_rank_projection"
    CIRCLE_POWER = "circle_power"
    EXPLICIT = "explicit"


# kinds acting on a single circle through Fourier multipliers sign(D + a)^ε|D + a|^p
CIRCLE_KINDS = (ModelKind.CIRCLE_DIRAC, ModelKind.ABS_CIRCLE_DIRAC,
                ModelKind.TORUS_LAPLACIAN_SHIFT, ModelKind.CIRCLE_POWER)


class ModelDescriptor(BaseModel):
    """
    Wire format of a model operator: { "kind": "...", "params": {...} }.

    Tensor descriptors carry their factors as nested descriptors under
    params "first" and "second".
    """
    kind: ModelKind = Field(..., description="Model kind")
    params: Dict[str, Any] = Field(default_factory=dict, description="Kind-specific parameters")


@dataclass(frozen=True)
class CirclePowerData:
    """Normalised circle multiplier scale·sign(D + shift)^parity·|D + shift|^power."""

    shift: float
    power: float
    parity: int
    scale: float


@dataclass(frozen=True)
class SpectralOperator:
    """
    Immutable descriptor of a model operator.

    `order` is the effective bi-order; one-factor operators carry a zero
    second entry. `closed_form` names the continuation engine of its
    spectral series: "hurwitz" for circle, oscillator and tensor models,
    "finite" for finite spectra.
    """

    kind: ModelKind
    params: Dict[str, Any]
    order: BiOrder
    geometry: ModelGeometry = field(default_factory=ModelGeometry)
    closed_form: Optional[str] = None
    self_adjoint: bool = True
    elliptic: bool = True
    factors: Tuple['SpectralOperator', ...] = ()
    circle: Optional[CirclePowerData] = None
    scale: float = 1.0

    @property
    def is_tensor(self) -> bool:
        return self.kind == ModelKind.TENSOR

    @property
    def is_circle(self) -> bool:
        return self.circle is not None

    @property
    def is_finite(self) -> bool:
        return self.closed_form == "finite"

    def descriptor(self) -> ModelDescriptor:
        """The wire descriptor this operator was built from."""
        params = dict(self.params)
        if self.is_tensor:
            params["first"] = self.factors[0].descriptor().model_dump(mode="json")
            params["second"] = self.factors[1].descriptor().model_dump(mode="json")
        return ModelDescriptor(kind=self.kind, params=params)

    def label(self) -> str:
        """Short human-readable name."""
        if self.is_tensor:
            return f"{self.factors[0].label()}⊗{self.factors[1].label()}"
        inner = ", ".join(f"{key}={value}" for key, value in sorted(self.params.items())
                          if key not in ("first", "second"))
        return f"{self.kind.value}({inner})"


@dataclass(frozen=True)
class SpectralDatum:
    """An eigenvalue with its multiplicity and sign."""

    value: float
    multiplicity: int
    sign: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError(f"Multiplicity must be positive, got {self.multiplicity}")
        expected = (self.value > 0) - (self.value < 0)
        if self.sign != expected:
            raise ValueError(f"Sign {self.sign} inconsistent with value {self.value}")
