"""
Parameter-dependent parametrix of a − λ.

Every component of the parametrix is a finite sum Σ_ℓ β_ℓ·R^ℓ with
R = (a₀₀ − λ)^{−1} and λ-free coefficients β_ℓ on the grid. The recursion
works on these R-polynomials, so one construction serves both the
resolvent at a fixed λ and the Cauchy integrals of complex powers.

Derivatives follow D(βR^ℓ) = (Dβ)R^ℓ − ℓβ(Da₀₀)R^{ℓ+1}. ξ-derivatives of
a − λ act on the components of a only, since λ is ξ-independent.
"""

from dataclasses import dataclass, field
import logging
import math
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .builder import from_table, identity_symbol
from .calculus import (
    _omega_power, _resolve_depth, combine, compose, falling_factorial,
    shift_order, spectral_derivative,
)
from .domain import ClassicalBisingularSymbol, DomainError, Number

logger = logging.getLogger(__name__)


class SingularResolventError(DomainError):
    """Raised when λ meets the range of the leading component on the grid."""


@dataclass
class RPolynomial:
    """Σ_ℓ coefficients[ℓ]·(a₀₀ − λ)^{−ℓ} with coefficients on the grid."""

    coefficients: Dict[int, np.ndarray] = field(default_factory=dict)

    def add(self, power: int, values: np.ndarray) -> None:
        if power in self.coefficients:
            self.coefficients[power] = self.coefficients[power] + values
        else:
            self.coefficients[power] = np.array(values, dtype=complex)

    def times_resolvent(self, factor: np.ndarray) -> 'RPolynomial':
        """factor·R·self: raises every power by one."""
        return RPolynomial({power + 1: factor * beta for power, beta in self.coefficients.items()})

    def derivative(self, axis: int, leading_derivative: np.ndarray) -> 'RPolynomial':
        """First-order D_{x_axis} of the R-polynomial."""
        orders = (1, 0) if axis == 0 else (0, 1)
        result = RPolynomial()
        for power, beta in self.coefficients.items():
            result.add(power, spectral_derivative(beta, orders))
            result.add(power + 1, -power * beta * leading_derivative)
        return result

    def evaluate(self, leading: np.ndarray, lam: Number) -> np.ndarray:
        resolvent = 1.0 / (leading - lam)
        total = np.zeros(leading.shape, dtype=complex)
        for power, beta in self.coefficients.items():
            total = total + beta * resolvent ** power
        return total

    def integrate(self, kernel: Callable[[int], np.ndarray]) -> np.ndarray:
        """Σ_ℓ β_ℓ·kernel(ℓ), kernel(ℓ) a contour integral of λ-weights against R^ℓ."""
        total = None
        for power, beta in self.coefficients.items():
            term = beta * kernel(power)
            total = term if total is None else total + term
        return total

    @property
    def max_power(self) -> int:
        return max(self.coefficients) if self.coefficients else 0


def parametrix_terms(a: ClassicalBisingularSymbol,
                     depth: Optional[Tuple[int, int]] = None) -> Dict[Tuple[int, int], RPolynomial]:
    """
    R-polynomial components b_JK of the parametrix of a − λ.

    Args:
        a: Symbol with invertible leading component away from λ
        depth: Truncation (N1, N2)

    Returns:
        Mapping (J, K) -> RPolynomial, b₀₀ = R
    """
    n1, n2 = _resolve_depth(depth, a)
    leading = a.table[0, 0]
    leading_derivatives = (spectral_derivative(leading, (1, 0)), spectral_derivative(leading, (0, 1)))
    ones = np.ones(leading.shape, dtype=complex)
    terms: Dict[Tuple[int, int], RPolynomial] = {(0, 0): RPolynomial({1: ones})}
    derivatives: Dict[Tuple[int, int, int, int], RPolynomial] = {}

    def derivative_of(j: int, k: int, a1: int, a2: int) -> RPolynomial:
        key = (j, k, a1, a2)
        if key not in derivatives:
            if a1 > 0:
                base = derivative_of(j, k, a1 - 1, a2)
                derivatives[key] = base.derivative(0, leading_derivatives[0])
            elif a2 > 0:
                base = derivative_of(j, k, a1, a2 - 1)
                derivatives[key] = base.derivative(1, leading_derivatives[1])
            else:
                derivatives[key] = terms[(j, k)]
        return derivatives[key]

    live = [(j, k) for j in range(n1 + 1) for k in range(n2 + 1) if np.any(a.table[j, k])]
    for total in range(1, n1 + n2 + 1):
        for big_j in range(max(0, total - n2), min(n1, total) + 1):
            big_k = total - big_j
            accumulated = RPolynomial()
            for j, k in live:
                d1, d2 = a.order.degree(j, k)
                for a1 in range(big_j - j + 1):
                    for a2 in range(big_k - k + 1):
                        jb, kb = big_j - j - a1, big_k - k - a2
                        if (j, k, a1, a2) == (0, 0, 0, 0):
                            continue
                        if a.multiplier and (a1 or a2):
                            continue
                        coefficient = falling_factorial(d1, a1) * falling_factorial(d2, a2) / \
                            (math.factorial(a1) * math.factorial(a2))
                        if coefficient == 0:
                            continue
                        weight = coefficient * _omega_power(a1, a2) * a.table[j, k]
                        for power, beta in derivative_of(jb, kb, a1, a2).coefficients.items():
                            accumulated.add(power, weight * beta)
            terms[(big_j, big_k)] = accumulated.times_resolvent(-ones)
    logger.debug(f"Built parametrix R-polynomials up to depth ({n1}, {n2}), "
                 f"max resolvent power {max(t.max_power for t in terms.values())}")
    return terms


def check_resolvent_point(a: ClassicalBisingularSymbol, lam: Number, tol: float = 1e-8) -> None:
    """
    Raise SingularResolventError when λ lies in the range of σ^{m1,m2} on the grid.

    For a real leading component the range is the interval between its
    extreme values; otherwise λ must keep distance `tol` from every sample.
    """
    leading = a.table[0, 0]
    scale = max(1.0, abs(lam))
    distance = float(np.min(np.abs(leading - lam)))
    if distance <= tol * scale:
        raise SingularResolventError(f"λ = {lam} meets the leading symbol on the grid (distance {distance:.3e})")
    if np.all(np.abs(leading.imag) <= 1e-12) and abs(complex(lam).imag) <= tol * scale:
        low, high = float(np.min(leading.real)), float(np.max(leading.real))
        if low - tol * scale <= complex(lam).real <= high + tol * scale:
            raise SingularResolventError(f"λ = {lam} lies in the range [{low}, {high}] of the leading symbol")


def resolvent_parametrix(a: ClassicalBisingularSymbol, lam: Number,
                         depth: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
    """
    Parametrix b̃(λ) of a − λ, of bi-order (−m1, −m2).

    At a fixed λ the recursion b_JK = −R·Σ(lower terms of (a − λ)∘b) runs on
    grid values directly, with the same spectral derivatives as compose, so
    the residual of the truncated composition vanishes to rounding.

    Raises:
        SingularResolventError: If λ lies in the range of the leading symbol
        TruncationError: If depth exceeds the available components
    """
    check_resolvent_point(a, lam)
    n1, n2 = _resolve_depth(depth, a)
    resolvent = 1.0 / (a.table[0, 0] - lam)
    table = np.zeros((n1 + 1, n2 + 1) + a.table.shape[2:], dtype=complex)
    table[0, 0] = resolvent
    live = [(j, k) for j in range(n1 + 1) for k in range(n2 + 1) if np.any(a.table[j, k])]
    for total in range(1, n1 + n2 + 1):
        for big_j in range(max(0, total - n2), min(n1, total) + 1):
            big_k = total - big_j
            accumulated = np.zeros(resolvent.shape, dtype=complex)
            for j, k in live:
                d1, d2 = a.order.degree(j, k)
                for a1 in range(big_j - j + 1):
                    for a2 in range(big_k - k + 1):
                        if (j, k, a1, a2) == (0, 0, 0, 0):
                            continue
                        if a.multiplier and (a1 or a2):
                            continue
                        coefficient = falling_factorial(d1, a1) * falling_factorial(d2, a2) / \
                            (math.factorial(a1) * math.factorial(a2))
                        if coefficient == 0:
                            continue
                        lower = table[big_j - j - a1, big_k - k - a2]
                        accumulated += coefficient * _omega_power(a1, a2) * a.table[j, k] * \
                            spectral_derivative(lower, (a1, a2))
            table[big_j, big_k] = -resolvent * accumulated
    logger.debug(f"Resolvent parametrix at λ = {lam} to depth ({n1}, {n2})")
    return from_table(-a.order, table, a.multiplier)


def resolvent_residual(a: ClassicalBisingularSymbol, lam: Number, b: ClassicalBisingularSymbol,
                       depth: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
    """Symbol r(λ) of (a − λ)∘b − 1, as a symbol of bi-order (0, 0)."""
    product = compose(a, b, depth)
    n1, n2 = product.depth
    relabelled = shift_order(b, product.order)
    trimmed = from_table(product.order, np.array(relabelled.table[:n1 + 1, :n2 + 1]), b.multiplier)
    shifted = combine(product, trimmed, 1.0, -lam)
    return combine(shifted, identity_symbol((n1, n2), a.grid), 1.0, -1.0)
