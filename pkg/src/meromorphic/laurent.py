"""
Laurent coefficients by trapezoidal contour quadrature.

c_j = (2πi)^{−1} ∮ f(z)(z − z0)^{−j−1} dz on a circle of radius r becomes
the discrete Fourier coefficient (1/N) Σ f(z0 + r e^{iθ_n}) r^{−j} e^{−ijθ_n},
which is exact up to aliasing of c_{j±N}.
"""

import logging
from typing import Callable, Dict, Optional

import numpy as np

from .domain import LaurentConfig, LaurentExpansion

logger = logging.getLogger(__name__)

MIN_NODES = 64


def _coefficients(f: Callable[[complex], complex], z0: complex, radius: float, nodes: int,
                  lowest: int, highest: int) -> Dict[int, complex]:
    angles = 2.0 * np.pi * np.arange(nodes) / nodes
    points = z0 + radius * np.exp(1j * angles)
    values = np.array([complex(f(complex(z))) for z in points])
    spectrum = np.fft.fft(values) / nodes
    # fft index k carries e^{−ikθ}; coefficient j lives at k = j mod N
    return {j: complex(spectrum[j % nodes] * radius ** (-j)) for j in range(lowest, highest + 1)}


def laurent_at(f: Callable[[complex], complex], z0: complex, max_order: int = 2,
               radius: Optional[float] = None, config: Optional[LaurentConfig] = None) -> LaurentExpansion:
    """
    Laurent coefficients c_{−max_order} .. c_M of f around z0.

    Args:
        f: Evaluator, meromorphic near z0 with pole order ≤ max_order
        z0: Expansion point
        max_order: Most singular coefficient extracted
        radius: Contour radius; defaults to config.max_radius
        config: Node count and extraction range

    Returns:
        LaurentExpansion whose error_bound compares radius r against r/2

    Raises:
        ValueError: For fewer than 64 nodes or a non-positive radius
        Exception: Whatever f raises on the contour
    """
    config = config or LaurentConfig()
    if config.nodes < MIN_NODES:
        raise ValueError(f"Contour quadrature needs at least {MIN_NODES} nodes, got {config.nodes}")
    radius = config.max_radius if radius is None else float(radius)
    if not radius > 0:
        raise ValueError(f"Contour radius must be positive, got {radius}")
    z0 = complex(z0)

    coarse = _coefficients(f, z0, radius, config.nodes, -max_order, config.max_positive)
    fine = _coefficients(f, z0, radius / 2.0, config.nodes, -max_order, config.max_positive)
    scale = max(1.0, max(abs(c) for c in coarse.values()))
    error = max(abs(coarse[j] - fine[j]) for j in range(-max_order, min(2, config.max_positive) + 1))
    error_bound = max(error, 1e-15 * scale)
    logger.debug(f"Laurent at {z0}: radius {radius}, {config.nodes} nodes, error bound {error_bound:.2e}")
    return LaurentExpansion(center=z0, coefficients=fine, error_bound=error_bound, radius=radius / 2.0)
