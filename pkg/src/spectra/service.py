"""
Spectra service providing unified access to model operators.

This module provides the main public interface for building model
operators, enumerating their spectra, splitting them by sign and bridging
them to classical bisingular symbols.
"""

import logging
from typing import Any, List, Mapping, Optional, Tuple, Union

from symbolcore.domain import ClassicalBisingularSymbol, ExactFactor

from . import bridge, enumeration, models
from .decomposition import SpectralFilter, sign_decomposition
from .domain import ModelKind, SpectralDatum, SpectralOperator
from .store import ModelStore

logger = logging.getLogger(__name__)


class SpectraService:
    """
    Main service for model operators.

    Operators are immutable descriptors; every enumeration starts afresh.
    """

    def __init__(self):
        self.store = ModelStore()

    def make_model(self, kind: Union[str, ModelKind], params: Optional[Mapping[str, Any]] = None) -> SpectralOperator:
        """
        Build a model operator.

        Args:
            kind: One of circle_dirac, abs_circle_dirac, torus_laplacian_shift,
                harmonic_oscillator, tensor, finite_rank_projection, circle_power, explicit
            params: Kind-specific parameters

        Returns:
            SpectralOperator

        Raises:
            ModelError: For unknown kinds or invalid parameters
        """
        return models.make_model(kind, params)

    def tensor(self, first: models.OperatorSpec, second: models.OperatorSpec) -> SpectralOperator:
        return models.tensor(first, second)

    def negate(self, operator: SpectralOperator) -> SpectralOperator:
        return models.negate(operator)

    def eigenvalues(self, operator: SpectralOperator, count: int) -> List[SpectralDatum]:
        """
        First `count` spectral data in |value| order.

        Raises:
            EnumerationError: For spectra accumulating at zero
        """
        return enumeration.eigenvalues(operator, count)

    def counting_function(self, operator: SpectralOperator, T: float) -> int:
        return enumeration.counting_function(operator, T)

    def sign_decomposition(self, operator: SpectralOperator) -> Tuple[SpectralFilter, SpectralFilter]:
        """
        Spectral projections onto positive and negative spectrum.

        Raises:
            KernelError: If zero lies in the spectrum
        """
        return sign_decomposition(operator)

    def exact_symbol(self, operator: SpectralOperator, depth: Optional[Tuple[int, int]] = None,
                     grid: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
        """
        Classical symbol of a circle or circle-tensor model.

        Raises:
            NoTorusSymbolError: For models without a torus symbol
        """
        return bridge.exact_symbol(operator, depth, grid)

    def exact_factor(self, operator: SpectralOperator, depth: int = 4, grid_size: int = 16) -> ExactFactor:
        return bridge.exact_factor(operator, depth, grid_size)

    def has_symbol(self, operator: SpectralOperator) -> bool:
        return bridge.has_symbol(operator)

    def load_model(self, path: str) -> SpectralOperator:
        return self.store.load_descriptor(path)

    def save_model(self, operator: SpectralOperator, path: str) -> None:
        self.store.save_descriptor(operator, path)

    def dump_spectrum(self, operator: SpectralOperator, count: int, path: str) -> int:
        """Write the first `count` data of a spectrum as CSV."""
        return self.store.write_spectrum(self.eigenvalues(operator, count), path)
