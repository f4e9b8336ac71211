"""
Finite-part lattice sums for the canonical trace TRb.

On the torus the diagonal value of the kernel of Op(a) is (2π)^{−2} times
the lattice sum Σ_l a(θ, l). Subtracting the bihomogeneous terms
c_j(θ, ω)|l|^{m−j} beyond a cut-off L and adding back their continued sums
gives the finite part

    FP Σ_l f(l) = Σ_{|l|≤L} f(l) + Σ_{j≤N} (c_j(+1) + c_j(−1))·ζ_H(j − m, L + 1),

which drops a remainder of size O(L^{Re m − N}). The continued sums have
poles exactly when m is an integer, where TRb is undefined.

Symbols carrying exact tensor factors are summed factor by factor. Symbols
known only through their components are traced as their truncated
expansion with the zero modes removed, which replaces every lattice sum by
the Riemann value ζ(j − m).
"""

import logging
from typing import Optional, Tuple

import numpy as np

from meromorphic.hurwitz import hurwitz_zeta
from symbolcore.domain import ClassicalBisingularSymbol, ExactFactor, Number, TruncationError
from wodzicki.domain import OrderError

from .domain import FinitePartConfig, FinitePartValue

logger = logging.getLogger(__name__)

INTEGER_TOLERANCE = 1e-12


def is_integer_order(m: Number) -> bool:
    m = complex(m)
    return abs(m.imag) < INTEGER_TOLERANCE and abs(m.real - round(m.real)) < INTEGER_TOLERANCE


def check_admissible(a: ClassicalBisingularSymbol) -> None:
    """
    Raises:
        OrderError: If either order is an integer
    """
    for slot, m in enumerate((a.order.m1, a.order.m2), start=1):
        if is_integer_order(m):
            raise OrderError(f"TRb needs non-integer orders; slot {slot} has order {m}")


def factor_finite_part(factor: ExactFactor, depth: int, cutoff: int) -> np.ndarray:
    """
    FP Σ_l f(θ, l) at every θ grid point of one exact factor.

    Raises:
        TruncationError: If the factor has fewer than `depth` + 1 components
    """
    components = np.asarray(factor.components)
    if depth > components.shape[0] - 1:
        raise TruncationError(f"Finite part needs {depth + 1} components, factor has {components.shape[0]}")
    theta_index = np.arange(components.shape[1]).reshape(-1, 1)
    frequencies = np.arange(-cutoff, cutoff + 1).reshape(1, -1)
    values = np.asarray(factor.evaluate(theta_index, frequencies), dtype=complex)
    head = np.broadcast_to(values, (components.shape[1], frequencies.size)).sum(axis=1)
    tail = np.zeros(components.shape[1], dtype=complex)
    for j in range(depth + 1):
        weight = components[j, :, 0] + components[j, :, 1]
        if np.any(weight):
            tail = tail + weight * hurwitz_zeta(j - complex(factor.order), cutoff + 1.0)
    return head + tail


def _exact_density(a: ClassicalBisingularSymbol, depth: Tuple[int, int], cutoff: int) -> np.ndarray:
    first, second = a.exact.factors
    fp1 = factor_finite_part(first, depth[0], cutoff)
    fp2 = factor_finite_part(second, depth[1], cutoff)
    return np.outer(fp1, fp2) / (2.0 * np.pi) ** 2


def _component_terms(a: ClassicalBisingularSymbol, depth: Tuple[int, int]) -> np.ndarray:
    """Per-component densities (2π)^{−2}·Σ_ω c_jk·ζ(j − m₁)ζ(k − m₂), shape (N1+1, N2+1, G1, G2)."""
    n1, n2 = depth
    if n1 > a.depth[0] or n2 > a.depth[1]:
        raise TruncationError(f"Finite part needs depth ({n1}, {n2}), symbol has {a.depth}")
    zeta1 = [hurwitz_zeta(j - complex(a.order.m1), 1.0) for j in range(n1 + 1)]
    zeta2 = [hurwitz_zeta(k - complex(a.order.m2), 1.0) for k in range(n2 + 1)]
    summed = np.sum(a.table[:n1 + 1, :n2 + 1], axis=(3, 5))
    weights = np.outer(zeta1, zeta2).reshape(n1 + 1, n2 + 1, 1, 1)
    return summed * weights / (2.0 * np.pi) ** 2


def _default_depth(a: ClassicalBisingularSymbol) -> Tuple[int, int]:
    if a.exact is not None:
        return tuple(np.asarray(f.components).shape[0] - 1 for f in a.exact.factors)
    return a.depth


def kernel_difference_density(a: ClassicalBisingularSymbol, n1: Optional[int] = None, n2: Optional[int] = None,
                              config: Optional[FinitePartConfig] = None) -> np.ndarray:
    """
    Diagonal density of the kernel of Op(a) minus its bihomogeneous singularities.

    Args:
        a: Symbol of non-integer bi-order
        n1: Terms subtracted in the first slot, defaults to all available
        n2: Terms subtracted in the second slot, defaults to all available
        config: Lattice cut-off

    Returns:
        Density on the (θ₁, θ₂) grid, shape (G1, G2)

    Raises:
        OrderError: If either order is an integer
        TruncationError: If more terms are requested than the symbol carries
    """
    check_admissible(a)
    config = config or FinitePartConfig()
    default = _default_depth(a)
    depth = (default[0] if n1 is None else n1, default[1] if n2 is None else n2)
    if a.exact is not None:
        return _exact_density(a, depth, config.cutoff)
    return np.sum(_component_terms(a, depth), axis=(0, 1))


def trb(a: ClassicalBisingularSymbol, depth: Optional[Tuple[int, int]] = None,
        config: Optional[FinitePartConfig] = None) -> FinitePartValue:
    """
    Canonical trace TRb(a), the integral of the kernel difference density over the torus.

    On bi-orders below (−1, −1) this is the operator trace.

    Raises:
        OrderError: If either order is an integer
    """
    check_admissible(a)
    config = config or FinitePartConfig()
    depth = tuple(depth or _default_depth(a))
    area = (2.0 * np.pi) ** 2

    if a.exact is not None:
        value = complex(np.mean(_exact_density(a, depth, config.cutoff)) * area)
        certificate = 0.0
        if config.halving:
            coarse = complex(np.mean(_exact_density(a, depth, config.cutoff // 2)) * area)
            certificate = abs(value - coarse)
    else:
        terms = _component_terms(a, depth)
        value = complex(np.mean(np.sum(terms, axis=(0, 1))) * area)
        last = np.zeros(terms.shape[:2], dtype=bool)
        last[-1, :] = last[:, -1] = True
        certificate = float(np.max(np.abs(np.sum(terms[last], axis=0)))) * area
    certificate = max(certificate, config.certificate_floor * max(1.0, abs(value)))
    logger.debug(f"TRb of a symbol of order ({a.order.m1}, {a.order.m2}) with {depth} terms "
                 f"subtracted: {value} (certificate {certificate:.1e})")
    return FinitePartValue(value=value, subtracted_terms=depth, certificate=certificate)
