"""
Complex powers of classical bisingular symbols.

A^z is the contour integral of λ^z against the parametrix of a − λ. Every
parametrix component is an R-polynomial Σ_ℓ β_ℓ·(a₀₀ − λ)^{−ℓ} with
λ-free coefficients, so the integral acts on the Cauchy kernels
(2πi)^{−1}∮ λ^z (a₀₀ − λ)^{−ℓ} dλ one power at a time. The kernels are
integrated numerically at every grid point and checked against their
closed forms.
"""

import logging
import math
from typing import Dict, Optional, Tuple

import numpy as np

from symbolcore.builder import from_table, identity_symbol
from symbolcore.calculus import adjoint, combine, compose, sup_norm
from symbolcore.domain import BiOrder, ClassicalBisingularSymbol, Number, Sector
from symbolcore.ellipticity import lambda_elliptic_check, resolvent_bound_constant
from symbolcore.parametrix import parametrix_terms

from .contours import cauchy_kernel, closed_cauchy_kernel
from .domain import AssumptionError, ComplexPower, ResolventBound

logger = logging.getLogger(__name__)

ELLIPTIC_RADIUS = 100.0
KERNEL_TOLERANCE = 1e-8
SELF_ADJOINT_TOLERANCE = 1e-10
LEADING_FLOOR = 1e-10
MAX_CONSTANT = 1e8


def resolvent_bound_check(a: ClassicalBisingularSymbol, sector: Sector,
                          radial: Tuple[int, int] = (64, 128)) -> ResolventBound:
    """
    Sample sup |(λ − a_{m₁,m₂})^{−1}|·(|λ| + 1) over ∂Λ, Λ and the cospheres.

    The check passes when the constant is finite and moves by at most 10%
    when the radial λ grid is refined.
    """
    coarse = resolvent_bound_constant(a, sector, radial[0])
    fine = resolvent_bound_constant(a, sector, radial[1])
    passed = bool(math.isfinite(coarse) and coarse <= MAX_CONSTANT and abs(fine - coarse) <= 0.1 * coarse)
    logger.debug(f"Resolvent bound {coarse:.4g} → {fine:.4g} under refinement, passed {passed}")
    return ResolventBound(constant=fine, coarse=coarse, passed=passed)


def check_power_assumptions(a: ClassicalBisingularSymbol, sector: Sector) -> None:
    """
    Λ-ellipticity of `a` and a spectral gap: no leading value inside Λ_ε.

    Raises:
        AssumptionError: With the failing witness
    """
    inside = [complex(v) for v in np.ravel(a.table[0, 0]) if sector.contains(complex(v))]
    if inside:
        raise AssumptionError(f"Leading symbol takes the value {inside[0]} inside the sector",
                              {'condition': 'gap', 'lambda': inside[0]})
    result = lambda_elliptic_check(a, sector, ELLIPTIC_RADIUS)
    if not result.passed:
        raise AssumptionError(f"Symbol is not Λ-elliptic: {result.witness}", result.witness)


def _power_table(a: ClassicalBisingularSymbol, w: complex, axis: float,
                 depth: Tuple[int, int], nodes: int) -> Tuple[np.ndarray, float]:
    terms = parametrix_terms(a, depth)
    leading = a.table[0, 0]
    kernels: Dict[int, np.ndarray] = {}
    certificate = 0.0

    def kernel(power: int) -> np.ndarray:
        nonlocal certificate
        if power not in kernels:
            numeric = cauchy_kernel(leading, w, power, axis, nodes)
            closed = closed_cauchy_kernel(leading, w, power, axis)
            scale = max(1.0, float(np.max(np.abs(closed))))
            certificate = max(certificate, float(np.max(np.abs(numeric - closed))) / scale)
            kernels[power] = numeric
        return kernels[power]

    n1, n2 = depth
    table = np.zeros((n1 + 1, n2 + 1) + leading.shape, dtype=complex)
    for (j, k), term in terms.items():
        if term.coefficients:
            table[j, k] = term.integrate(kernel)
    return table, certificate


def complex_power(a: ClassicalBisingularSymbol, z: Number, depth: Optional[Tuple[int, int]] = None,
                  sector: Optional[Sector] = None, nodes: int = 64, check: bool = True) -> ComplexPower:
    """
    Symbol of A^z by term-wise contour integration of the parametrix.

    Exponents with Re z ≥ 0 go through A^{z−k}∘A^k for k ≤ 2.

    Args:
        a: Λ-elliptic symbol with invertible leading component
        z: Exponent
        depth: Truncation (N1, N2), defaults to the depth of `a`
        sector: Sector Λ free of spectrum, defaults to the left half-plane
        nodes: Trapezoidal nodes per Cauchy kernel
        check: Whether to verify Λ-ellipticity first

    Returns:
        ComplexPower with a symbol of bi-order (m₁z, m₂z)

    Raises:
        AssumptionError: If `a` is not Λ-elliptic, has spectrum in Λ, or Re z ≥ 2
    """
    z = complex(z)
    sector = sector or Sector.left_half_plane()
    depth = depth or a.depth
    if check:
        check_power_assumptions(a, sector)
    k = 0 if z.real < 0 else math.floor(z.real) + 1
    if k > 2:
        raise AssumptionError(f"Re z = {z.real} needs a reduction A^(z−k)∘A^k with k > 2")
    w = z - k
    table, certificate = _power_table(a, w, sector.axis_angle, depth, nodes)
    symbol = from_table(BiOrder(a.order.m1 * w, a.order.m2 * w), table, a.multiplier)
    for _ in range(k):
        symbol = compose(symbol, a, depth)
    if certificate > KERNEL_TOLERANCE:
        logger.warning(f"Cauchy kernels of A^{z} deviate from their closed forms by {certificate:.2e}")
    logger.debug(f"A^{z} to depth {depth} with reduction k = {k}, kernel certificate {certificate:.1e}")
    return ComplexPower(symbol=symbol, z=z, base_order=a.order, certificate=certificate, reduction=k)


def sign_operator_symbol(a: ClassicalBisingularSymbol, nodes: int = 64) -> ClassicalBisingularSymbol:
    """
    Symbol of F = A·(A²)^{−1/2}.

    Raises:
        AssumptionError: If `a` is not self-adjoint, or its leading symbol is
            not real and nonvanishing
    """
    defect = sup_norm(combine(adjoint(a), a, 1.0, -1.0))
    if defect > SELF_ADJOINT_TOLERANCE:
        raise AssumptionError(f"Symbol is not self-adjoint (defect {defect:.2e})",
                              {'condition': 'self_adjoint', 'defect': defect})
    leading = a.table[0, 0]
    if float(np.max(np.abs(leading.imag))) > SELF_ADJOINT_TOLERANCE:
        raise AssumptionError("Leading symbol is not real", {'condition': 'real'})
    if float(np.min(np.abs(leading))) <= LEADING_FLOOR:
        raise AssumptionError("Leading symbol vanishes", {'condition': 'joint'})
    square = compose(a, a)
    root = complex_power(square, -0.5, nodes=nodes)
    sign = compose(a, root.symbol)
    logger.debug(f"Sign operator of a symbol of order ({a.order.m1}, {a.order.m2}) to depth {sign.depth}")
    return sign


def sign_square_defect(sign: ClassicalBisingularSymbol) -> float:
    """Largest component of F∘F − 1."""
    square = compose(sign, sign)
    return sup_norm(combine(square, identity_symbol(square.depth, square.grid), 1.0, -1.0))
