"""
Symbol service providing unified access to the bisingular symbol calculus.

This module provides the main public interface for constructing, composing
and checking classical bisingular symbols. It coordinates the builder,
calculus, parametrix, ellipticity, oracle and store components.
"""

import logging
from typing import Dict, Optional, Tuple

import numpy as np

from . import builder, calculus
from .compactification import rc_inverse, rc_map
from .domain import (
    BiOrder, ClassicalBisingularSymbol, CompatibilityResult, EllipticityResult,
    Number, PrincipalSymbols, Sector,
)
from .ellipticity import lambda_elliptic_check
from .oracle import ModeLatticeOracle
from .parametrix import RPolynomial, parametrix_terms, resolvent_parametrix, resolvent_residual
from .store import SymbolStore

logger = logging.getLogger(__name__)


class SymbolService:
    """
    Main service for symbol calculus operations.

    Every truncating operation defaults to the smallest depth available in
    its inputs; results carry their truncation certificate through
    `ClassicalBisingularSymbol.truncation_certificate`.
    """

    def __init__(self, config: Optional[builder.CalculusConfig] = None, base_dir: Optional[str] = None):
        """
        Initialize the symbol service.

        Args:
            config: Default depth and grid for constructed symbols
            base_dir: Directory for relative symbol-file paths
        """
        self.config = config or builder.CalculusConfig()
        self.store = SymbolStore(base_dir)
        self.oracle = ModeLatticeOracle()

    # Construction

    def make_symbol(self, order: BiOrder, components: Dict[Tuple[int, int], builder.ComponentSpec],
                    depth: Optional[Tuple[int, int]] = None, multiplier: bool = False) -> ClassicalBisingularSymbol:
        """
        Build a symbol from component specifications.

        Args:
            order: Bi-order (m1, m2)
            components: Mapping (j, k) -> array, scalar or callable of (θ₁, ω₁, θ₂, ω₂)
            depth: Truncation, defaults to the configured depth
            multiplier: True for x-independent symbols

        Returns:
            ClassicalBisingularSymbol
        """
        return builder.from_components(order, components, depth or self.config.depth,
                                       self.config.grid, multiplier)

    def identity(self) -> ClassicalBisingularSymbol:
        return builder.identity_symbol(self.config.depth, self.config.grid)

    def random_symbol(self, seed: int, order: BiOrder, depth: Optional[Tuple[int, int]] = None,
                      elliptic: bool = False) -> ClassicalBisingularSymbol:
        """Deterministic random x-dependent symbol for property suites."""
        rng = np.random.default_rng(seed)
        make = builder.random_elliptic_symbol if elliptic else builder.random_symbol
        return make(rng, order, depth or self.config.depth, self.config.grid)

    # Calculus

    def compose(self, a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol,
                depth: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
        return calculus.compose(a, b, depth)

    def adjoint(self, a: ClassicalBisingularSymbol,
                depth: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
        return calculus.adjoint(a, depth)

    def commutator(self, a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol,
                   depth: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
        return calculus.commutator(a, b, depth)

    def combine(self, a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol,
                alpha: Number = 1.0, beta: Number = 1.0) -> ClassicalBisingularSymbol:
        return calculus.combine(a, b, alpha, beta)

    def principal_symbols(self, a: ClassicalBisingularSymbol) -> PrincipalSymbols:
        return calculus.principal_symbols(a)

    def compatibility_check(self, a: ClassicalBisingularSymbol, tol: float = 1e-12) -> CompatibilityResult:
        return calculus.compatibility_check(a, tol)

    # Compactification

    def rc_map(self, xi) -> Tuple[np.ndarray, float]:
        return rc_map(xi)

    def rc_inverse(self, z0: float, z) -> np.ndarray:
        return rc_inverse(z0, z)

    # Ellipticity and parametrix

    def lambda_elliptic_check(self, a: ClassicalBisingularSymbol, sector: Sector,
                              R: float = 100.0) -> EllipticityResult:
        """
        Check Λ-ellipticity of a symbol on the grid.

        Args:
            a: Symbol to check
            sector: Sector Λ
            R: Largest sampled |λ|

        Returns:
            EllipticityResult; on failure `witness` names the failing condition and point
        """
        result = lambda_elliptic_check(a, sector, R)
        if not result.passed:
            logger.info(f"Λ-ellipticity fails: {result.witness}")
        return result

    def resolvent_parametrix(self, a: ClassicalBisingularSymbol, lam: Number,
                             depth: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
        """
        Parametrix b̃(λ) with (a − λ)∘b̃(λ) = 1 + r(λ) up to truncation.

        Raises:
            SingularResolventError: If λ meets the range of the leading symbol
        """
        return resolvent_parametrix(a, lam, depth)

    def resolvent_residual(self, a: ClassicalBisingularSymbol, lam: Number,
                           b: ClassicalBisingularSymbol) -> ClassicalBisingularSymbol:
        return resolvent_residual(a, lam, b)

    def parametrix_terms(self, a: ClassicalBisingularSymbol,
                         depth: Optional[Tuple[int, int]] = None) -> Dict[Tuple[int, int], RPolynomial]:
        return parametrix_terms(a, depth)

    # Persistence

    def load_symbol(self, path: str) -> ClassicalBisingularSymbol:
        return self.store.load(path)

    def save_symbol(self, symbol: ClassicalBisingularSymbol, path: str) -> str:
        return self.store.save(symbol, path)
