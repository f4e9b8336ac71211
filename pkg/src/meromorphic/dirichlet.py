"""
Dirichlet-series layer: every model spectrum as Hurwitz combinations.

A model's modulus series Z(s) = Σ|λ|^{−s} and signed series
H(s) = Σ sign(λ)|λ|^{−s} are built from terms w·ζ_H(p·s − q, a), scaled by
sign·b^{−s}. Tensor models are products of their factors' series.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from spectra.domain import KernelError, ModelKind, SpectralOperator
from spectra.models import effective_dimension

from .domain import HurwitzConfig, UnsupportedModelError
from .hurwitz import hurwitz_zeta

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HurwitzTerm:
    """weight · ζ_H(slope·s − offset, shift)."""

    weight: complex
    slope: float
    offset: float
    shift: float
    config: Optional[HurwitzConfig] = field(default=None, compare=False)

    def evaluate(self, s: complex) -> complex:
        return self.weight * hurwitz_zeta(self.slope * s - self.offset, self.shift, self.config)

    @property
    def pole(self) -> float:
        return (1.0 + self.offset) / self.slope


@dataclass(frozen=True)
class DirichletSeries:
    """sign · base^{−s} · Σ terms."""

    terms: Tuple[HurwitzTerm, ...]
    base: float = 1.0
    sign: float = 1.0

    def evaluate(self, s: complex) -> complex:
        s = complex(s)
        total = sum((term.evaluate(s) for term in self.terms), 0.0j)
        return self.sign * self.base ** (-s) * total

    def poles(self) -> List[float]:
        return sorted({term.pole for term in self.terms})


@dataclass(frozen=True)
class FiniteSeries:
    """Σ m·sign(v)^signed·|v|^{−s} over the non-zero values of a finite spectrum."""

    values: Tuple[float, ...]
    multiplicities: Tuple[int, ...]
    signed: bool = False

    def evaluate(self, s: complex) -> complex:
        s = complex(s)
        total = 0.0j
        for value, multiplicity in zip(self.values, self.multiplicities):
            if value == 0:
                continue
            weight = math.copysign(1.0, value) if self.signed else 1.0
            total += multiplicity * weight * abs(value) ** (-s)
        return total

    def poles(self) -> List[float]:
        return []


@dataclass(frozen=True)
class ProductSeries:
    """Product of factor series, scaled by sign · base^{−s}."""

    factors: Tuple[object, ...] = field(default_factory=tuple)
    base: float = 1.0
    sign: float = 1.0

    def evaluate(self, s: complex) -> complex:
        s = complex(s)
        value = self.sign * self.base ** (-s)
        for factor in self.factors:
            value *= factor.evaluate(s)
        return value

    def poles(self) -> List[float]:
        return sorted({pole for factor in self.factors for pole in factor.poles()})


def _circle_series(operator: SpectralOperator, signed: bool,
                   config: Optional[HurwitzConfig] = None) -> DirichletSeries:
    data = operator.circle
    alpha = data.shift - math.floor(data.shift)
    if data.power == 0:
        raise UnsupportedModelError(f"{operator.label()} has order zero; its spectral series diverges everywhere")
    if alpha < 1e-12 or alpha > 1 - 1e-12:
        raise KernelError(f"{operator.label()} has a kernel")
    negative_weight = (-1.0) ** data.parity if signed else 1.0
    terms = (HurwitzTerm(1.0, data.power, 0.0, alpha, config),
             HurwitzTerm(negative_weight, data.power, 0.0, 1.0 - alpha, config))
    sign = math.copysign(1.0, data.scale) if signed else 1.0
    return DirichletSeries(terms=terms, base=abs(data.scale), sign=sign)


def _oscillator_series(operator: SpectralOperator, signed: bool,
                       config: Optional[HurwitzConfig] = None) -> DirichletSeries:
    # eigenvalue 2k + n with multiplicity C(k+n−1, n−1), a polynomial in x = k + n/2
    n = operator.params["n"]
    roots = [n / 2.0 - i for i in range(1, n)]
    coefficients = P.polyfromroots(roots) / math.factorial(n - 1) if roots else np.array([1.0])
    terms = tuple(HurwitzTerm(float(c), 1.0, float(p), n / 2.0, config)
                  for p, c in enumerate(coefficients) if abs(c) > 1e-15)
    sign = math.copysign(1.0, operator.scale) if signed else 1.0
    return DirichletSeries(terms=terms, base=2.0 * abs(operator.scale), sign=sign)


def _finite_series(operator: SpectralOperator, signed: bool) -> FiniteSeries:
    if operator.kind == ModelKind.FINITE_RANK_PROJECTION:
        values: Sequence[float] = [operator.scale]
        multiplicities: Sequence[int] = [operator.params["rank"]]
    else:
        values = [float(v) * operator.scale for v in operator.params["values"]]
        multiplicities = [int(m) for m in (operator.params.get("multiplicities") or [1] * len(values))]
    return FiniteSeries(values=tuple(values), multiplicities=tuple(multiplicities), signed=signed)


def spectral_series(operator: SpectralOperator, signed: bool = False, config: Optional[HurwitzConfig] = None):
    """
    Closed-form series of a model: Z(s) when `signed` is False, H(s) otherwise.

    `config` sets the Euler–Maclaurin parameters of every Hurwitz term.

    Raises:
        KernelError: If a circle factor has zero in its spectrum
        UnsupportedModelError: For order-zero circle multipliers
    """
    if operator.is_circle:
        return _circle_series(operator, signed, config)
    if operator.kind == ModelKind.HARMONIC_OSCILLATOR:
        return _oscillator_series(operator, signed, config)
    if operator.is_tensor:
        factors = tuple(spectral_series(factor, signed, config) for factor in operator.factors)
        sign = math.copysign(1.0, operator.scale) if signed else 1.0
        return ProductSeries(factors=factors, base=abs(operator.scale), sign=sign)
    return _finite_series(operator, signed)


def predicted_poles(operator: SpectralOperator, span: int = 64) -> List[Tuple[float, int]]:
    """
    Candidate poles (n − j)/m of Z(s), j = 0..span−1, per factor.

    Returns:
        (location, count) pairs; count 2 marks a location predicted by both factors
    """
    factors = operator.factors if operator.is_tensor else (operator,)
    counts = {}
    for factor in factors:
        if factor.is_finite:
            continue
        m = complex(factor.order.m1).real
        if m == 0:
            continue
        n = effective_dimension(factor)
        for j in range(span):
            location = round((n - j) / m, 12)
            counts[location] = counts.get(location, 0) + 1
    return sorted(counts.items())
