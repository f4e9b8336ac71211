"""
Bridge from circle multiplier models to classical bisingular symbols.

A circle model scale·sign(D + a)^ε|D + a|^p is unitarily equivalent to the
same multiplier with the shift reduced to α ∈ [−1/2, 1/2), and for |ξ| ≥ 1

    sign(ξ + α)^ε|ξ + α|^p = ω^ε Σ_j binom(p, j)α^j ω^j |ξ|^{p−j},

so its classical components are x-independent and exact.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from symbolcore.builder import DEFAULTS, one_factor, tensor_symbol
from symbolcore.calculus import binomial
from symbolcore.domain import ClassicalBisingularSymbol, ExactFactor

from .domain import CirclePowerData, NoTorusSymbolError, SpectralOperator

logger = logging.getLogger(__name__)


def reduced_shift(shift: float) -> float:
    """Representative of the shift in [−1/2, 1/2)."""
    return shift - np.floor(shift + 0.5)


def circle_factor(data: CirclePowerData, depth: int, grid_size: int, scale: float = 1.0) -> ExactFactor:
    """
    Exact one-factor symbol of a circle multiplier.

    Args:
        data: Normalised multiplier
        depth: Number of subleading components N
        grid_size: θ grid size
        scale: Extra factor (the tensor scale)
    """
    alpha = reduced_shift(data.shift)
    total_scale = data.scale * scale
    components = []
    for j in range(depth + 1):
        coefficient = total_scale * binomial(data.power, j) * alpha ** j

        def spec(theta, omega, coefficient=coefficient, j=j):
            return coefficient * omega ** (j + data.parity) + 0 * theta

        components.append(spec)

    def evaluate(theta_index, frequencies):
        t = np.asarray(frequencies, dtype=float) + alpha
        magnitude = np.ones_like(t) if data.power == 0 else np.abs(t) ** data.power
        if data.parity:
            magnitude = magnitude * np.sign(t)
        values = total_scale * magnitude
        if theta_index is not None:
            values = np.broadcast_to(values, np.broadcast(np.asarray(theta_index), t).shape)
        return values

    return one_factor(data.power, components, grid_size, evaluate=evaluate)


def identity_factor(depth: int, grid_size: int) -> ExactFactor:
    def evaluate(theta_index, frequencies):
        return np.ones(np.shape(frequencies))

    return one_factor(0.0, [1.0] + [0.0] * depth, grid_size, evaluate=evaluate)


def exact_factor(operator: SpectralOperator, depth: int = 4, grid_size: int = 16,
                 scale: float = 1.0) -> ExactFactor:
    """
    Exact symbol of a one-factor circle model.

    Raises:
        NoTorusSymbolError: If the model is not a circle multiplier
    """
    if not operator.is_circle:
        raise NoTorusSymbolError(f"{operator.label()} has no Fourier-multiplier symbol on the circle")
    return circle_factor(operator.circle, depth, grid_size, scale)


def exact_symbol(operator: SpectralOperator, depth: Optional[Tuple[int, int]] = None,
                 grid: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
    """
    Classical bisingular symbol of a circle model or a tensor of circle models.

    One-factor models A are bridged as A⊗1 with bi-order (m, 0).

    Raises:
        NoTorusSymbolError: For oscillator, finite-rank and explicit models
    """
    depth = depth or DEFAULTS.depth
    grid = grid or DEFAULTS.grid
    if operator.is_tensor:
        first, second = operator.factors
        f1 = exact_factor(first, depth[0], grid[0], operator.scale)
        f2 = exact_factor(second, depth[1], grid[1])
    else:
        f1 = exact_factor(operator, depth[0], grid[0])
        f2 = identity_factor(depth[1], grid[1])
    logger.debug(f"Bridged {operator.label()} to a symbol of order ({f1.order}, {f2.order})")
    return tensor_symbol(f1, f2, depth)


def has_symbol(operator: SpectralOperator) -> bool:
    if operator.is_tensor:
        return all(factor.is_circle for factor in operator.factors)
    return operator.is_circle
