"""
Operator traces of trace-class circle models from truncated eigenvalue sums.
"""

import logging
from typing import Tuple

import numpy as np

from spectra.domain import CirclePowerData, SpectralOperator
from wodzicki.domain import OrderError

logger = logging.getLogger(__name__)


def _circle_trace(data: CirclePowerData, terms: int) -> Tuple[float, float]:
    """
    Σ_l scale·sign(l + a)^parity·|l + a|^p over |l| ≤ terms, plus midpoint tails.

    The tail beyond ±terms is ∫ (x ± a)^p dx from terms + 1/2; its error is
    bounded by |f'|/24 at the start of the tail.
    """
    if data.power >= -1:
        raise OrderError(f"Eigenvalue sums of |D + {data.shift}|^{data.power} diverge")
    l = np.arange(-terms, terms + 1, dtype=float)
    t = l + data.shift
    values = np.abs(t) ** data.power
    if data.parity:
        values = values * np.sign(t)
    head = float(np.sum(values))
    p = data.power
    right_start, left_start = terms + 0.5 + data.shift, terms + 0.5 - data.shift
    right = right_start ** (p + 1) / (-p - 1)
    left = left_start ** (p + 1) / (-p - 1)
    if data.parity:
        left = -left
    bound = abs(p) * (right_start ** (p - 1) + left_start ** (p - 1)) / 24.0
    return data.scale * (head + right + left), abs(data.scale) * bound


def spectral_trace(operator: SpectralOperator, terms: int = 10_000) -> Tuple[float, float]:
    """
    Trace of a tensor of circle models with orders below −1.

    Returns:
        (trace, tail bound)

    Raises:
        OrderError: If an order is not below −1 or a factor is not a circle model
    """
    if not operator.is_tensor or not all(f.is_circle for f in operator.factors):
        raise OrderError(f"{operator.label()} is not a tensor of circle models")
    (t1, b1), (t2, b2) = (_circle_trace(f.circle, terms) for f in operator.factors)
    trace = operator.scale * t1 * t2
    bound = abs(operator.scale) * (abs(t1) * b2 + abs(t2) * b1 + b1 * b2)
    logger.debug(f"Spectral trace of {operator.label()} from {2 * terms + 1} terms per factor: "
                 f"{trace} (tail bound {bound:.1e})")
    return trace, bound
