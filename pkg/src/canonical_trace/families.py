"""
Holomorphic families of circle powers and the double residue of TRb.

A family z ↦ A(z) of bi-order (z + o₁, z + o₂) has a canonical trace that
is meromorphic in z, with a pole of order two where both orders reach −1.
Its c₋₂ coefficient is compared against Wres² of the member at the pole,
and the sign relating the two is recorded rather than assumed.
"""

import logging
from typing import Callable, Optional, Tuple

import numpy as np

from meromorphic.domain import LaurentConfig
from meromorphic.laurent import laurent_at
from spectra.bridge import reduced_shift
from symbolcore.builder import DEFAULTS, one_factor, tensor_symbol
from symbolcore.calculus import binomial
from symbolcore.domain import ClassicalBisingularSymbol, ExactFactor, Number
from wodzicki.residues import wres2_quadrature

from .domain import FamilyResidue, FinitePartConfig
from .finite_part import trb

logger = logging.getLogger(__name__)

FAMILY_RADIUS = 0.25
SIGN_TOLERANCE = 1e-6

SymbolFamily = Callable[[complex], ClassicalBisingularSymbol]


def power_factor(shift: float, power: Number, depth: int = 4, grid_size: int = 16) -> ExactFactor:
    """Exact factor |D + shift|^power for complex powers."""
    alpha = reduced_shift(shift)
    power = complex(power)
    components = [binomial(power, j) * alpha ** j * np.array([1.0, (-1.0) ** j]) for j in range(depth + 1)]

    def evaluate(theta_index, frequencies):
        t = np.asarray(frequencies, dtype=float) + alpha
        values = np.abs(t).astype(complex) ** power
        if theta_index is not None:
            values = np.broadcast_to(values, np.broadcast(np.asarray(theta_index), t).shape)
        return values

    return one_factor(power, components, grid_size, evaluate=evaluate)


def power_family(shifts: Tuple[float, float], offsets: Tuple[float, float] = (0.0, 0.0),
                 depth: Optional[Tuple[int, int]] = None,
                 grid: Optional[Tuple[int, int]] = None) -> SymbolFamily:
    """The family z ↦ |D_a|^{z+o₁} ⊗ |D_b|^{z+o₂}."""
    depth = depth or DEFAULTS.depth
    grid = grid or DEFAULTS.grid

    def family(z: complex) -> ClassicalBisingularSymbol:
        first = power_factor(shifts[0], z + offsets[0], depth[0], grid[0])
        second = power_factor(shifts[1], z + offsets[1], depth[1], grid[1])
        return tensor_symbol(first, second, depth)

    return family


def trb_family_residue(family: SymbolFamily, z0: Number, radius: float = FAMILY_RADIUS,
                       config: Optional[FinitePartConfig] = None) -> FamilyResidue:
    """
    Res²_{z=z0} TRb(A(z)) by contour quadrature, and Wres²(A(z0)).

    Args:
        family: Holomorphic family of symbols
        z0: Integer point where the orders are forbidden
        radius: Contour radius, below the distance to the next integer
        config: Lattice cut-off for each TRb evaluation

    Returns:
        FamilyResidue with the sign chart of residue = ±Wres²
    """
    config = config or FinitePartConfig(halving=False)
    z0 = complex(z0)

    def trace(z: complex) -> complex:
        return trb(family(z), config=config).value

    expansion = laurent_at(trace, z0, max_order=2, radius=radius, config=LaurentConfig())
    residue = expansion.coefficients[-2]
    wres2 = wres2_quadrature(family(z0)).value
    chart = {"+Wres2": abs(residue - wres2), "-Wres2": abs(residue + wres2)}
    sign = 1 if chart["+Wres2"] <= chart["-Wres2"] else -1
    discrepancy = min(chart.values())
    if discrepancy > SIGN_TOLERANCE:
        logger.warning(f"Double residue {residue} of TRb at {z0} matches neither sign of Wres² = {wres2}")
    logger.debug(f"TRb double residue at {z0}: {residue} = {'+' if sign > 0 else '−'}Wres² "
                 f"(error bound {expansion.error_bound:.1e})")
    return FamilyResidue(z0=z0, residue=residue, wres2=wres2, sign=sign, discrepancy=discrepancy,
                         error_bound=expansion.error_bound, chart=chart)
