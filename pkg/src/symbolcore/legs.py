"""
Smoothing legs and their tensor products with one-factor classical symbols.

A smoothing leg is a finite-rank operator on one circle, stored as a dense
matrix on a Fourier mode window. Tensoring it with a classical symbol in the
other factor gives operators of order −∞ in the leg's factor: they carry no
bihomogeneous component at any finite bi-degree, yet their restricted
traces are finite.
"""

from dataclasses import dataclass
import logging
from typing import Iterable, Optional, Tuple

import numpy as np

from .builder import zero_symbol
from .domain import BiOrder, ClassicalBisingularSymbol, ExactFactor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmoothingLeg:
    """
    Finite-rank operator on one circle factor.

    `matrix[n, l]` is the coefficient of e^{inx} in the image of e^{ilx},
    with modes n, l ranging over −W/2 ≤ · < W/2.
    """

    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2:
            raise ValueError(f"Leg matrix must be square with an even window, got {matrix.shape}")
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @property
    def window(self) -> int:
        return self.matrix.shape[0]

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def compose(self, other: 'SmoothingLeg') -> 'SmoothingLeg':
        if other.window != self.window:
            raise ValueError(f"Leg windows differ: {self.window} vs {other.window}")
        return SmoothingLeg(self.matrix @ other.matrix)

    def idempotency_defect(self) -> float:
        return float(np.max(np.abs(self.matrix @ self.matrix - self.matrix)))

    @classmethod
    def mode_projection(cls, modes: Iterable[int], window: int = 16) -> 'SmoothingLeg':
        """Orthogonal projection onto the span of the given Fourier modes."""
        matrix = np.zeros((window, window), dtype=complex)
        for mode in modes:
            index = mode + window // 2
            if not 0 <= index < window:
                raise ValueError(f"Mode {mode} outside window {window}")
            matrix[index, index] = 1.0
        return cls(matrix)

    @classmethod
    def rank_one(cls, vector: np.ndarray, covector: Optional[np.ndarray] = None) -> 'SmoothingLeg':
        """u⊗v* with v = u by default; trace v*u."""
        u = np.asarray(vector, dtype=complex)
        v = u if covector is None else np.asarray(covector, dtype=complex)
        return cls(np.outer(u, np.conj(v)))


@dataclass(frozen=True)
class LegTensorSymbol:
    """
    Tensor product of a one-factor classical symbol with a smoothing leg.

    `slot` is the factor (0 or 1) carrying the classical symbol; the leg acts
    on the other factor.
    """

    factor: ExactFactor
    leg: SmoothingLeg
    slot: int = 0

    def __post_init__(self):
        if self.slot not in (0, 1):
            raise ValueError(f"Slot must be 0 or 1, got {self.slot}")

    @property
    def grid_size(self) -> int:
        return np.asarray(self.factor.components).shape[1]

    def to_symbol(self, depth: Tuple[int, int] = (4, 4)) -> ClassicalBisingularSymbol:
        """
        The bisingular symbol: zero at every finite bi-degree.

        The leg's order is recorded as −depth − 1 so the table lies entirely
        below the reach of any truncated computation.
        """
        g = self.grid_size
        order = BiOrder(self.factor.order, -depth[1] - 1) if self.slot == 0 else \
            BiOrder(-depth[0] - 1, self.factor.order)
        return zero_symbol(order, depth, (g, g))

    def compose(self, other: 'LegTensorSymbol', window: Optional[int] = None) -> 'LegTensorSymbol':
        """
        Product of two leg tensors with x-independent classical factors.

        The classical factors multiply pointwise on the lattice; their
        expansions multiply as power series in |ξ|^{−1}.
        """
        if other.slot != self.slot:
            raise ValueError("Leg tensors must carry their classical factor in the same slot")
        first, second = self.factor, other.factor
        c1, c2 = np.asarray(first.components), np.asarray(second.components)
        depth = min(c1.shape[0], c2.shape[0])
        product = np.zeros((depth,) + c1.shape[1:], dtype=complex)
        for j in range(depth):
            for i in range(j + 1):
                product[j] += c1[i] * c2[j - i]

        def evaluate(theta_index, frequencies):
            return first.evaluate(theta_index, frequencies) * second.evaluate(theta_index, frequencies)

        factor = ExactFactor(order=first.order + second.order, evaluate=evaluate, components=product)
        return LegTensorSymbol(factor=factor, leg=self.leg.compose(other.leg), slot=self.slot)

    def idempotency_defect(self, window: int = 64) -> float:
        """max over |l| < window/2 of ‖f(l)²P² − f(l)P‖ for the operator f(D)⊗P."""
        frequencies = np.arange(-window // 2, window // 2)
        values = np.asarray(self.factor.evaluate(None, frequencies), dtype=complex)
        square = self.leg.matrix @ self.leg.matrix
        defect = 0.0
        for value in values:
            defect = max(defect, float(np.max(np.abs(value * value * square - value * self.leg.matrix))))
        return defect
