"""
Λ-ellipticity on the grid.

A symbol passes when, for every sampled λ in the sector Λ,
  (i)  σ₁(θ₁, ω₁) − λ is invertible as a one-factor operator on the second circle,
  (ii) σ₂(θ₂, ω₂) − λ is invertible as a one-factor operator on the first circle,
  (iii) |(σ^{m1,m2} − λ)^{−1}| ≤ C(|λ| + 1)^{−1} on the cospheres.
Invertibility of (i) and (ii) means a nonvanishing leading symbol and a
smallest singular value above 1e−8 for the finite-mode matrix.
"""

import logging
from typing import Callable, Dict, Optional

import numpy as np

from .domain import ClassicalBisingularSymbol, EllipticityResult, Sector
from .oracle import ModeLatticeOracle

logger = logging.getLogger(__name__)

SINGULAR_VALUE_FLOOR = 1e-8
LEADING_FLOOR = 1e-10


def lambda_samples(sector: Sector, R: float, radial: int = 16, angles: int = 9) -> np.ndarray:
    """λ = 0 plus a polar grid of Λ with radii log-spaced up to R, boundary rays included."""
    radii = np.logspace(-3, np.log10(R), radial)
    return np.concatenate([[0.0 + 0.0j], sector.sample_points(radii, angles)])


def joint_bound(a: ClassicalBisingularSymbol, samples: np.ndarray) -> Dict[str, object]:
    """
    sup over samples and cospheres of (|λ| + 1)/|σ^{m1,m2} − λ|.

    Returns:
        Dictionary with 'constant' and the maximising 'lambda' and grid 'index'
    """
    leading = a.table[0, 0]
    best = {'constant': 0.0, 'lambda': None, 'index': None}
    for lam in samples:
        gap = np.abs(leading - lam)
        position = np.unravel_index(int(np.argmin(gap)), gap.shape)
        if gap[position] == 0:
            return {'constant': float('inf'), 'lambda': complex(lam), 'index': tuple(int(i) for i in position)}
        quotient = (abs(lam) + 1.0) / float(gap[position])
        if quotient > best['constant']:
            best = {'constant': quotient, 'lambda': complex(lam), 'index': tuple(int(i) for i in position)}
    return best


def _one_factor_symbol(a: ClassicalBisingularSymbol, slot: int, base_theta: int,
                       base_omega: int) -> Callable[[int], np.ndarray]:
    """Frequency function of σ₁ (slot 0) or σ₂ (slot 1) frozen at a base cosphere point."""
    order = a.order.m2 if slot == 0 else a.order.m1

    def symbol_at(l: int) -> np.ndarray:
        magnitude = float(abs(l)) if l != 0 else 1.0
        omega_index = 1 if l < 0 else 0
        depth = a.depth[1] if slot == 0 else a.depth[0]
        values = 0.0
        for i in range(depth + 1):
            if slot == 0:
                component = a.table[0, i, base_theta, base_omega, :, omega_index]
            else:
                component = a.table[i, 0, :, omega_index, base_theta, base_omega]
            values = values + component * magnitude ** (order - i)
        return values

    return symbol_at


def lambda_elliptic_check(a: ClassicalBisingularSymbol, sector: Sector, R: float,
                          oracle: Optional[ModeLatticeOracle] = None,
                          max_constant: float = 1e8) -> EllipticityResult:
    """
    Check Λ-ellipticity of `a` for λ sampled in the sector up to radius R.

    Args:
        a: Symbol to check
        sector: Sector Λ
        R: Largest sampled |λ|
        oracle: Mode-lattice oracle for the one-factor invertibility tests
        max_constant: Largest joint constant C accepted as finite

    Returns:
        EllipticityResult with the sampled constant C, or the first failing witness

    Raises:
        ValueError: If R is not positive
    """
    if not R > 0:
        raise ValueError(f"Sampling radius must be positive, got {R}")
    oracle = oracle or ModeLatticeOracle(window=16)
    leading = a.table[0, 0]

    magnitude = np.abs(leading)
    if float(np.min(magnitude)) <= LEADING_FLOOR:
        position = tuple(int(i) for i in np.unravel_index(int(np.argmin(magnitude)), magnitude.shape))
        logger.debug(f"Joint principal symbol vanishes at grid index {position}")
        return EllipticityResult(passed=False, constant=float('inf'),
                                 witness={'condition': 'joint', 'index': position, 'lambda': 0j})

    samples = lambda_samples(sector, R)
    bound = joint_bound(a, samples)
    if not bound['constant'] <= max_constant:
        return EllipticityResult(passed=False, constant=float(bound['constant']),
                                 witness={'condition': 'joint', 'index': bound['index'],
                                          'lambda': bound['lambda']})

    operator_samples = lambda_samples(sector, R, radial=5, angles=3)
    for slot, grid_size in ((0, a.grid[0]), (1, a.grid[1])):
        for theta in range(grid_size):
            for omega in range(2):
                matrix = oracle.one_factor_matrix(_one_factor_symbol(a, slot, theta, omega))
                identity = np.eye(matrix.shape[0])
                for lam in operator_samples:
                    smallest = oracle.smallest_singular_value(matrix - lam * identity)
                    if smallest <= SINGULAR_VALUE_FLOOR:
                        return EllipticityResult(
                            passed=False, constant=float(bound['constant']),
                            witness={'condition': f'sigma{slot + 1}', 'theta_index': theta,
                                     'omega_index': omega, 'lambda': complex(lam),
                                     'singular_value': smallest})

    logger.debug(f"Λ-ellipticity holds on the grid with C = {bound['constant']:.4f}")
    return EllipticityResult(passed=True, constant=float(bound['constant']))


def resolvent_bound_constant(a: ClassicalBisingularSymbol, sector: Sector, radial: int) -> float:
    """Joint constant C sampled with `radial` log-spaced radii in [1e−3, 1e3]."""
    radii = np.concatenate([[0.0], np.logspace(-3, 3, radial)])
    samples = sector.sample_points(radii, angles=17)
    return float(joint_bound(a, samples)['constant'])
