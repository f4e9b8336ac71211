"""
Term-by-term calculus on truncated classical bisingular symbols.

Composition and adjoints follow the Kohn–Nirenberg expansions

    a∘b ~ Σ_α (1/α!) ∂_ξ^α a · D_x^α b,      a* ~ Σ_α (1/α!) ∂_ξ^α D_x^α ā,

with D = −i∂_θ applied by spectral differentiation on the periodic grids.
For a component c(ω)|ξ|^d the ξ-derivative of order n is
(d)_n·ω^n·c(ω)|ξ|^{d−n}, (d)_n the falling factorial, so every term lands
on an exact entry of the component table.
"""

from functools import lru_cache
import logging
import math
from typing import Optional, Tuple

import numpy as np

from .builder import from_table
from .domain import (
    BiOrder, ClassicalBisingularSymbol, CompatibilityResult, ExactFactor, ExactSymbol,
    Number, OMEGA, PrincipalSymbols, TruncationError,
)

logger = logging.getLogger(__name__)

# axes of θ₁ and θ₂ in a component array (…, G1, 2, G2, 2)
THETA_AXES = (-4, -2)


def falling_factorial(d: Number, n: int) -> Number:
    """(d)_n = d(d−1)…(d−n+1), with (d)_0 = 1."""
    result = 1.0
    for i in range(n):
        result = result * (d - i)
    return result


def binomial(p: Number, n: int) -> Number:
    """Generalised binomial coefficient for real or complex p."""
    return falling_factorial(p, n) / math.factorial(n)


@lru_cache(maxsize=64)
def _wavenumbers(size: int, power: int) -> np.ndarray:
    k = np.fft.fftfreq(size, d=1.0 / size)
    if power % 2 == 1:
        k[size // 2] = 0.0
    return k ** power


def spectral_derivative(values: np.ndarray, orders: Tuple[int, int]) -> np.ndarray:
    """
    Apply D₁^{α₁}D₂^{α₂}, Dᵢ = −i∂_{θᵢ}, to grid values of shape (…, G1, 2, G2, 2).

    Odd derivatives drop the Nyquist mode.
    """
    result = values
    for axis, power in zip(THETA_AXES, orders):
        if power == 0:
            continue
        size = result.shape[axis]
        shape = [1] * result.ndim
        shape[axis] = size
        factor = _wavenumbers(size, power).reshape(shape)
        result = np.fft.ifft(np.fft.fft(result, axis=axis) * factor, axis=axis)
    return result


def _omega_power(a1: int, a2: int) -> np.ndarray:
    """ω₁^{α₁}ω₂^{α₂} broadcast over (G1, 2, G2, 2)."""
    return (OMEGA.reshape(1, 2, 1, 1) ** a1) * (OMEGA.reshape(1, 1, 1, 2) ** a2)


def _resolve_depth(depth: Optional[Tuple[int, int]], *symbols: ClassicalBisingularSymbol) -> Tuple[int, int]:
    available = (min(s.depth[0] for s in symbols), min(s.depth[1] for s in symbols))
    if depth is None:
        return available
    if depth[0] > available[0] or depth[1] > available[1]:
        raise TruncationError(f"Requested depth {tuple(depth)} exceeds available components {available}")
    if depth[0] < 0 or depth[1] < 0:
        raise ValueError(f"Depth must be non-negative, got {tuple(depth)}")
    return tuple(depth)


def _check_grids(*symbols: ClassicalBisingularSymbol) -> None:
    grids = {s.grid for s in symbols}
    if len(grids) != 1:
        raise ValueError(f"Symbols live on different grids: {sorted(grids)}")


def _product_exact(a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol,
                   depth: Tuple[int, int]) -> Optional[ExactSymbol]:
    """Exact factors of a product of tensor multipliers, when both carry them."""
    if a.exact is None or b.exact is None or not (a.multiplier and b.multiplier):
        return None
    factors = []
    for slot, (fa, fb) in enumerate(zip(a.exact.factors, b.exact.factors)):
        n = depth[slot]
        ca, cb = np.asarray(fa.components), np.asarray(fb.components)
        if ca.shape[0] <= n or cb.shape[0] <= n:
            return None
        product = np.zeros((n + 1,) + ca.shape[1:], dtype=complex)
        for j in range(n + 1):
            for i in range(j + 1):
                product[j] += ca[i] * cb[j - i]

        def evaluate(theta_index, frequencies, fa=fa, fb=fb):
            return fa.evaluate(theta_index, frequencies) * fb.evaluate(theta_index, frequencies)

        factors.append(ExactFactor(order=fa.order + fb.order, evaluate=evaluate, components=product))
    return ExactSymbol(factors=tuple(factors))


def compose(a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol,
            depth: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
    """
    Symbol of the operator product Op(a)Op(b), truncated at `depth`.

    Args:
        a: Left factor
        b: Right factor
        depth: Truncation (N1, N2); defaults to the smallest available depth

    Returns:
        Symbol of bi-order order(a) + order(b)

    Raises:
        TruncationError: If depth exceeds the components of either factor
    """
    _check_grids(a, b)
    n1, n2 = _resolve_depth(depth, a, b)
    grid = a.grid
    table = np.zeros((n1 + 1, n2 + 1, grid[0], 2, grid[1], 2), dtype=complex)

    derivatives = {}

    def derivative_of_b(j: int, k: int, a1: int, a2: int) -> np.ndarray:
        key = (j, k, a1, a2)
        if key not in derivatives:
            derivatives[key] = spectral_derivative(b.table[j, k], (a1, a2))
        return derivatives[key]

    live_a = [(j, k) for j in range(n1 + 1) for k in range(n2 + 1) if np.any(a.table[j, k])]
    live_b = [(j, k) for j in range(n1 + 1) for k in range(n2 + 1) if np.any(b.table[j, k])]
    for j, k in live_a:
        d1, d2 = a.order.degree(j, k)
        for jb, kb in live_b:
            max1 = n1 - j - jb
            max2 = n2 - k - kb
            if max1 < 0 or max2 < 0:
                continue
            if b.multiplier:
                max1 = max2 = 0
            for a1 in range(max1 + 1):
                c1 = falling_factorial(d1, a1) / math.factorial(a1)
                if c1 == 0:
                    continue
                for a2 in range(max2 + 1):
                    c2 = falling_factorial(d2, a2) / math.factorial(a2)
                    if c2 == 0:
                        continue
                    term = (c1 * c2) * _omega_power(a1, a2) * a.table[j, k]
                    table[j + jb + a1, k + kb + a2] += term * derivative_of_b(jb, kb, a1, a2)

    logger.debug(f"Composed symbols of orders ({a.order.m1}, {a.order.m2}) and "
                 f"({b.order.m1}, {b.order.m2}) at depth ({n1}, {n2})")
    return from_table(a.order + b.order, table, a.multiplier and b.multiplier,
                      exact=_product_exact(a, b, (n1, n2)))


def adjoint(a: ClassicalBisingularSymbol, depth: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
    """
    Symbol of the formal L² adjoint, truncated at `depth`.

    Raises:
        TruncationError: If depth exceeds the available components
    """
    n1, n2 = _resolve_depth(depth, a)
    order = a.order.conjugate()
    grid = a.grid
    table = np.zeros((n1 + 1, n2 + 1, grid[0], 2, grid[1], 2), dtype=complex)
    for j in range(n1 + 1):
        for k in range(n2 + 1):
            conjugate = np.conj(a.table[j, k])
            if not np.any(conjugate):
                continue
            d1, d2 = order.degree(j, k)
            max1, max2 = (0, 0) if a.multiplier else (n1 - j, n2 - k)
            for a1 in range(max1 + 1):
                c1 = falling_factorial(d1, a1) / math.factorial(a1)
                if c1 == 0:
                    continue
                for a2 in range(max2 + 1):
                    c2 = falling_factorial(d2, a2) / math.factorial(a2)
                    if c2 == 0:
                        continue
                    table[j + a1, k + a2] += (c1 * c2) * _omega_power(a1, a2) * \
                        spectral_derivative(conjugate, (a1, a2))
    return from_table(order, table, a.multiplier)


def combine(a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol,
            alpha: Number = 1.0, beta: Number = 1.0) -> ClassicalBisingularSymbol:
    """
    Linear combination αa + βb of two symbols of the same bi-order.

    Raises:
        ValueError: If the bi-orders or grids differ
    """
    _check_grids(a, b)
    if not a.order.matches(b.order):
        raise ValueError(f"Cannot combine orders ({a.order.m1}, {a.order.m2}) and ({b.order.m1}, {b.order.m2})")
    n1, n2 = _resolve_depth(None, a, b)
    table = alpha * a.table[:n1 + 1, :n2 + 1] + beta * b.table[:n1 + 1, :n2 + 1]
    joint = alpha * a.joint + beta * b.joint
    return ClassicalBisingularSymbol(order=a.order, table=table, joint=joint,
                                     multiplier=a.multiplier and b.multiplier)


def commutator(a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol,
               depth: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
    """Symbol of [a, b] = a∘b − b∘a."""
    return combine(compose(a, b, depth), compose(b, a, depth), 1.0, -1.0)


def shift_order(a: ClassicalBisingularSymbol, order: BiOrder) -> ClassicalBisingularSymbol:
    """Relabel the bi-order of a table, e.g. to subtract λ·b from a∘b."""
    return ClassicalBisingularSymbol(order=order, table=a.table, joint=a.joint,
                                     multiplier=a.multiplier, exact=None)


def principal_symbols(a: ClassicalBisingularSymbol) -> PrincipalSymbols:
    """
    The principal symbols σ₁ (row j = 0), σ₂ (column k = 0) and σ^{m1,m2}.
    """
    return PrincipalSymbols(sigma1=a.table[0], sigma2=a.table[:, 0], joint=a.joint)


def compatibility_check(a: ClassicalBisingularSymbol, tol: float = 1e-12) -> CompatibilityResult:
    """
    Compare the principal parts of σ₁ and σ₂ with the joint principal symbol.

    Returns:
        CompatibilityResult with the maximal pointwise discrepancy
    """
    principal = principal_symbols(a)
    error = max(float(np.max(np.abs(principal.sigma1[0] - principal.joint))),
                float(np.max(np.abs(principal.sigma2[0] - principal.joint))))
    return CompatibilityResult(passed=error < tol, max_error=error)


def sup_norm(a: ClassicalBisingularSymbol, min_index: Tuple[int, int] = (0, 0),
             max_index: Optional[Tuple[int, int]] = None) -> float:
    """Largest absolute component value over an index box of the table."""
    n1, n2 = max_index or a.depth
    block = a.table[min_index[0]:n1 + 1, min_index[1]:n2 + 1]
    return float(np.max(np.abs(block))) if block.size else 0.0
