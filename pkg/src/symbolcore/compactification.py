"""
Radial compactification of the frequency space onto the upper hemisphere.
"""

from typing import Tuple

import numpy as np

from .domain import DomainError


def rc_map(xi: np.ndarray) -> Tuple[np.ndarray, float]:
    """
    Map ξ ∈ ℝⁿ to (ξ/⟨ξ⟩, 1/⟨ξ⟩) on the open upper hemisphere S₊ⁿ.

    Args:
        xi: Finite frequency vector

    Returns:
        Tuple (z, z0) with |z|² + z0² = 1 and z0 > 0
    """
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    if not np.all(np.isfinite(xi)):
        raise DomainError("Frequency vector must be finite")
    bracket = float(np.sqrt(1.0 + np.dot(xi, xi)))
    return xi / bracket, 1.0 / bracket


def rc_inverse(z0: float, z: np.ndarray) -> np.ndarray:
    """
    Inverse of rc_map: (z0, z) ↦ z/z0.

    Raises:
        DomainError: If z0 <= 0 (boundary or lower hemisphere)
    """
    if not z0 > 0:
        raise DomainError(f"Last coordinate must be positive, got {z0}")
    return np.atleast_1d(np.asarray(z, dtype=float)) / z0
