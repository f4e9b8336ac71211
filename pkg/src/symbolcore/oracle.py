"""
Dense mode-lattice oracle for symbols on the circle × circle model.

Op(a) acts on Fourier modes by Op(a)e^{il·x} = a(x, l)e^{il·x}, so with
â_q(l) the Fourier coefficients of a(·, l) the operator has matrix entries
M[n, l] = â_{n−l}(l). The oracle evaluates exact compositions column by
column and builds small dense matrices for invertibility and trace checks.

The homogeneous expansion is singular at frequency zero; the oracle
evaluates it there with |l| replaced by 1 and ω = +1.
"""

import logging
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.linalg import svdvals

from .domain import ClassicalBisingularSymbol

logger = logging.getLogger(__name__)


def _abs_and_index(l: int) -> Tuple[float, int]:
    return (float(abs(l)) if l != 0 else 1.0), (1 if l < 0 else 0)


class ModeLatticeOracle:
    """
    Brute-force reference for symbol-level computations.

    Frequencies range over the lattice window −W/2 ≤ l < W/2 per factor.
    """

    def __init__(self, window: int = 64):
        """
        Initialize the oracle.

        Args:
            window: Number of Fourier modes per factor
        """
        if window < 4 or window % 2:
            raise ValueError(f"Lattice window must be an even integer >= 4, got {window}")
        self.window = window

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(-self.window // 2, self.window // 2)

    def full_symbol(self, a: ClassicalBisingularSymbol, l1: int, l2: int) -> np.ndarray:
        """
        Values of Σ_{jk} a_{jk}(θ, ω(l))|l₁|^{m1−j}|l₂|^{m2−k} on the θ grid.

        Returns:
            Array of shape (G1, G2)
        """
        r1, i1 = _abs_and_index(l1)
        r2, i2 = _abs_and_index(l2)
        n1, n2 = a.depth
        values = np.zeros(a.grid, dtype=complex)
        for j in range(n1 + 1):
            for k in range(n2 + 1):
                d1, d2 = a.order.degree(j, k)
                values += a.table[j, k, :, i1, :, i2] * (r1 ** d1) * (r2 ** d2)
        return values

    @staticmethod
    def signed_modes(size: int) -> np.ndarray:
        return np.fft.fftfreq(size, d=1.0 / size).astype(int)

    def compose_column(self, a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol,
                       l1: int, l2: int, cutoff: float = 1e-15) -> np.ndarray:
        """
        Exact symbol of Op(a)Op(b) at frequency (l1, l2).

        Uses (a∘b)(x, l) = Σ_q b̂_q(l) a(x, l+q) e^{iq·x}, summing the Fourier
        modes of b(·, l) above `cutoff` relative to the largest one.

        Returns:
            Array of shape (G1, G2) on the θ grid
        """
        grid = a.grid
        modes = np.fft.fft2(self.full_symbol(b, l1, l2)) / (grid[0] * grid[1])
        q1s, q2s = self.signed_modes(grid[0]), self.signed_modes(grid[1])
        theta1 = 2 * np.pi * np.arange(grid[0]).reshape(-1, 1) / grid[0]
        theta2 = 2 * np.pi * np.arange(grid[1]).reshape(1, -1) / grid[1]
        scale = float(np.max(np.abs(modes))) or 1.0
        result = np.zeros(grid, dtype=complex)
        for i1, q1 in enumerate(q1s):
            for i2, q2 in enumerate(q2s):
                coefficient = modes[i1, i2]
                if abs(coefficient) <= cutoff * scale:
                    continue
                phase = np.exp(1j * (q1 * theta1 + q2 * theta2))
                result += coefficient * self.full_symbol(a, l1 + q1, l2 + q2) * phase
        return result

    def one_factor_matrix(self, symbol_at: Callable[[int], np.ndarray],
                          window: Optional[int] = None) -> np.ndarray:
        """
        Dense matrix of a one-factor operator on the mode window.

        Args:
            symbol_at: Maps a frequency l to the symbol values on the θ grid
            window: Number of modes, defaults to the oracle window

        Returns:
            Matrix M with M[n, l] = ŝ_{n−l}(l)
        """
        window = window or self.window
        frequencies = np.arange(-window // 2, window // 2)
        matrix = np.zeros((window, window), dtype=complex)
        for column, l in enumerate(frequencies):
            values = np.asarray(symbol_at(int(l)), dtype=complex)
            modes = np.fft.fft(values) / values.size
            for row, n in enumerate(frequencies):
                q = int(n - l)
                if abs(q) < values.size // 2:
                    matrix[row, column] = modes[q % values.size]
        return matrix

    @staticmethod
    def smallest_singular_value(matrix: np.ndarray) -> float:
        return float(np.min(svdvals(matrix)))

    def diagonal_trace(self, symbol_at: Callable[[int], np.ndarray],
                       window: Optional[int] = None) -> complex:
        """Σ_l ŝ₀(l) over the window: the trace of the finite-mode matrix."""
        window = window or self.window
        total = 0.0 + 0.0j
        for l in range(-window // 2, window // 2):
            total += complex(np.mean(np.asarray(symbol_at(l), dtype=complex)))
        return total
