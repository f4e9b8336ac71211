"""
Continued spectral functions of model operators.

Conventions, with Z and H the modulus and signed series of a model:
    zeta(A, z)  = Z(−z)                      Tr |A|^z, the A^z chart
    eta(A, z)   = H(z)                       Tr A|A|^{−(z+1)}
    ζ↑(A, z)    = P₊(−z) + e^{−iπz}·P₋(−z)
    ζ↓(A, z)    = P₊(−z) + e^{+iπz}·P₋(−z)   with P± = (Z ± H)/2
"""

import cmath
import logging
import math
from typing import Callable, List, Optional, Tuple

from spectra.domain import SpectralOperator
from spectra.enumeration import check_invertible

from .dirichlet import predicted_poles, spectral_series
from .domain import (
    Chart, Direction, HurwitzConfig, LaurentConfig, LaurentExpansion, PoleError, SpectralFunction,
    UnsupportedModelError,
)
from .hurwitz import hurwitz_zeta, shifted_hurwitz
from .laurent import laurent_at

logger = logging.getLogger(__name__)

Evaluator = Callable[[complex], complex]


class SpectralFunctions:
    """
    Evaluators of ζ, η and the spectral cuts of one model.

    Series are built once; evaluation at a pole raises PoleError carrying
    the Laurent expansion, removable singularities return their limit.
    """

    def __init__(self, operator: SpectralOperator, laurent_config: Optional[LaurentConfig] = None,
                 hurwitz_config: Optional[HurwitzConfig] = None):
        # finite spectra are summed over their non-zero values
        if not operator.is_finite:
            check_invertible(operator)
        self.operator = operator
        self.laurent_config = laurent_config or LaurentConfig()
        self._modulus = spectral_series(operator, signed=False, config=hurwitz_config)
        self._signed = spectral_series(operator, signed=True, config=hurwitz_config)

    def modulus(self, s: complex) -> complex:
        """Z(s) = Σ|λ|^{−s}."""
        return self._modulus.evaluate(s)

    def signed(self, s: complex) -> complex:
        """H(s) = Σ sign(λ)|λ|^{−s}."""
        return self._signed.evaluate(s)

    def positive_part(self, s: complex) -> complex:
        return 0.5 * (self.modulus(s) + self.signed(s))

    def negative_part(self, s: complex) -> complex:
        return 0.5 * (self.modulus(s) - self.signed(s))

    def raw_zeta(self, z: complex) -> complex:
        return self.modulus(-complex(z))

    def raw_eta(self, z: complex) -> complex:
        return self.signed(complex(z))

    def raw_cut(self, direction: Direction, z: complex) -> complex:
        z = complex(z)
        phase = cmath.exp((-1j if Direction(direction) == Direction.UP else 1j) * math.pi * z)
        return self.positive_part(-z) + phase * self.negative_part(-z)

    def chart_function(self, function: SpectralFunction, chart: Chart) -> Evaluator:
        """The raw evaluator of a spectral function in the requested variable."""
        function = SpectralFunction(function)
        if function == SpectralFunction.ZETA:
            native, native_chart = self.raw_zeta, Chart.A_Z
        elif function == SpectralFunction.ETA:
            native, native_chart = self.raw_eta, Chart.A_MINUS_Z
        elif function == SpectralFunction.ZETA_UP:
            native, native_chart = (lambda z: self.raw_cut(Direction.UP, z)), Chart.A_Z
        else:
            native, native_chart = (lambda z: self.raw_cut(Direction.DOWN, z)), Chart.A_Z
        if Chart(chart) == native_chart:
            return native
        return lambda z: native(-complex(z))

    def candidates(self, chart: Chart) -> List[Tuple[float, int]]:
        """Predicted pole locations of Z in the requested chart, with coincidence counts."""
        poles = predicted_poles(self.operator)
        if Chart(chart) == Chart.A_Z:
            return sorted((-location, count) for location, count in poles)
        return poles

    def default_radius(self, z0: complex, chart: Chart) -> float:
        """Half the distance from z0 to the nearest other candidate, capped."""
        distances = [abs(complex(location) - z0) for location, _ in self.candidates(chart)]
        distances = [d for d in distances if d > 1e-9]
        radius = self.laurent_config.max_radius
        if distances:
            radius = min(radius, 0.5 * min(distances))
        return radius

    def laurent(self, function: SpectralFunction, chart: Chart, z0: complex,
                radius: Optional[float] = None) -> LaurentExpansion:
        f = self.chart_function(function, chart)
        z0 = complex(z0)
        radius = self.default_radius(z0, chart) if radius is None else radius
        return laurent_at(f, z0, max_order=2, radius=radius, config=self.laurent_config)

    def evaluate(self, function: SpectralFunction, chart: Chart, z: complex) -> complex:
        """
        Value of a spectral function, continued.

        Raises:
            PoleError: At a pole, with the Laurent expansion attached
        """
        z = complex(z)
        f = self.chart_function(function, chart)
        try:
            return complex(f(z))
        except PoleError:
            expansion = self.laurent(function, chart, z)
            if expansion.pole_order(self.laurent_config.pole_tolerance) > 0:
                raise PoleError(f"{function.value} of {self.operator.label()} has a pole at z = {z} "
                                f"({Chart(chart).value} chart)", expansion)
            logger.debug(f"Removable singularity of {function.value} at {z}")
            return expansion.coefficient(0)


def _as_circle_pair(operator: Optional[SpectralOperator]) -> Tuple[Optional[SpectralOperator], ...]:
    if operator is None:
        return None, None
    if operator.is_tensor:
        return operator.factors
    return operator, None


def _check_generator(q: SpectralOperator) -> float:
    data = q.circle if q is not None else None
    if data is None or data.power != 1 or data.parity != 0 or data.scale <= 0:
        raise UnsupportedModelError("Double ζ needs positive order-one circle generators |D + γ|")
    gamma = data.shift - math.floor(data.shift)
    if gamma < 1e-12 or gamma > 1 - 1e-12:
        raise UnsupportedModelError(f"{q.label()} has a kernel and no complex powers")
    return gamma


def factor_trace(b: Optional[SpectralOperator], q: SpectralOperator, z: complex,
                 config: Optional[HurwitzConfig] = None) -> complex:
    """
    Tr(b·q^{−z}) on one circle, for commuting circle multipliers b and q.

    Raises:
        UnsupportedModelError: If b is not a circle multiplier aligned with q
        PoleError: At a pole of the continuation
    """
    gamma = _check_generator(q)
    z = complex(z)
    scale = q.circle.scale ** (-z)
    if b is None:
        return scale * (hurwitz_zeta(z, gamma, config) + hurwitz_zeta(z, 1.0 - gamma, config))
    data = b.circle
    if data is None:
        raise UnsupportedModelError(f"{b.label()} does not commute with {q.label()} as a circle multiplier")
    beta = data.shift - math.floor(q.circle.shift)
    if not 0 < beta < 1:
        raise UnsupportedModelError(f"Shift of {b.label()} is not aligned with the lattice of {q.label()}")
    if data.power == 0:
        positive = hurwitz_zeta(z, gamma, config)
        negative = hurwitz_zeta(z, 1.0 - gamma, config)
    else:
        positive = shifted_hurwitz(z, gamma, beta - gamma, data.power, config)
        negative = shifted_hurwitz(z, 1.0 - gamma, gamma - beta, data.power, config)
    return data.scale * scale * (positive + (-1.0) ** data.parity * negative)


def double_zeta(b: Optional[SpectralOperator], q1: SpectralOperator, q2: SpectralOperator,
                z: complex, tau: complex, config: Optional[HurwitzConfig] = None) -> complex:
    """
    Tr(B·Q1^{−z}⊗Q2^{−τ}) for B a tensor of circle multipliers (None for the identity).

    Raises:
        UnsupportedModelError: For inputs outside the commuting circle models
        PoleError: At a pole in either variable
    """
    b1, b2 = _as_circle_pair(b)
    scale = b.scale if b is not None and b.is_tensor else 1.0
    return scale * factor_trace(b1, q1, z, config) * factor_trace(b2, q2, tau, config)
