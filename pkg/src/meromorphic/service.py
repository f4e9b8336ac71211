"""
Meromorphic service providing unified access to continued spectral functions.

This module provides the main public interface for Hurwitz values, ζ, the
double ζ, η and the spectral-cut ζ functions of model operators, Laurent
coefficients and pole tables, and the η residue identity.
"""

import logging
from typing import Callable, List, Optional, Tuple, Union

from spectra.bridge import has_symbol
from spectra.domain import SpectralOperator

from . import poles
from .continuation import SpectralFunctions, double_zeta
from .domain import (
    Chart, Direction, HurwitzConfig, LaurentConfig, LaurentExpansion, PoleError, PoleReport,
    ResidueIdentityResult, SpectralFunction,
)
from .hurwitz import hurwitz_zeta
from .laurent import laurent_at
from .store import PoleStore

logger = logging.getLogger(__name__)


class MeromorphicService:
    """
    Main service for continued spectral functions.

    Evaluators are pure; each call builds the closed-form series of its
    operator afresh.
    """

    def __init__(self, laurent_config: Optional[LaurentConfig] = None,
                 hurwitz_config: Optional[HurwitzConfig] = None):
        """
        Initialize the meromorphic service.

        Args:
            laurent_config: Contour quadrature parameters
            hurwitz_config: Euler–Maclaurin parameters
        """
        self.laurent_config = laurent_config or LaurentConfig()
        self.hurwitz_config = hurwitz_config or HurwitzConfig()
        self.store = PoleStore()

    def functions(self, operator: SpectralOperator) -> SpectralFunctions:
        return SpectralFunctions(operator, self.laurent_config, self.hurwitz_config)

    def hurwitz_zeta(self, s: complex, a: float) -> complex:
        """
        Hurwitz zeta ζ_H(s, a).

        Raises:
            PoleError: At s = 1
        """
        return hurwitz_zeta(s, a, self.hurwitz_config)

    def zeta(self, operator: SpectralOperator, z: complex, chart: Chart = Chart.A_Z) -> complex:
        """
        Spectral ζ function Tr |A|^z (A^z chart) or Tr |A|^{−z} (A^-z chart).

        Args:
            operator: Elliptic invertible model
            z: Complex argument
            chart: Variable convention

        Returns:
            Continued value

        Raises:
            KernelError: If the operator has a kernel
            PoleError: At a pole, carrying the Laurent expansion
        """
        return self.functions(operator).evaluate(SpectralFunction.ZETA, chart, z)

    def double_zeta(self, b: Optional[SpectralOperator], q1: SpectralOperator, q2: SpectralOperator,
                    z: complex, tau: complex) -> complex:
        """
        Tr(B·Q1^{−z}⊗Q2^{−τ}).

        Raises:
            UnsupportedModelError: Unless B and Q commute as circle multipliers
            PoleError: At a pole in either variable
        """
        return double_zeta(b, q1, q2, z, tau, self.hurwitz_config)

    def eta(self, operator: SpectralOperator, z: complex) -> complex:
        """
        η(A, z) = Tr A|A|^{−(z+1)} = Σ sign(λ)|λ|^{−z}.

        Raises:
            ValueError: If the operator is not self-adjoint
            PoleError: At a pole, carrying the Laurent expansion
        """
        self._require_self_adjoint(operator)
        return self.functions(operator).evaluate(SpectralFunction.ETA, Chart.A_MINUS_Z, z)

    def spectral_cut_zeta(self, operator: SpectralOperator, direction: Union[str, Direction], z: complex) -> complex:
        """
        ζ↑ (direction up) or ζ↓ (direction down) in the A^z variable.

        Raises:
            ValueError: If the operator is not self-adjoint
            PoleError: At a pole, carrying the Laurent expansion
        """
        self._require_self_adjoint(operator)
        function = SpectralFunction.ZETA_UP if Direction(direction) == Direction.UP else SpectralFunction.ZETA_DOWN
        return self.functions(operator).evaluate(function, Chart.A_Z, z)

    def laurent_at(self, f: Callable[[complex], complex], z0: complex, max_order: int = 2,
                   radius: Optional[float] = None) -> LaurentExpansion:
        return laurent_at(f, z0, max_order=max_order, radius=radius, config=self.laurent_config)

    def laurent(self, operator: SpectralOperator, function: Union[str, SpectralFunction], z0: complex,
                chart: Chart = Chart.A_Z) -> LaurentExpansion:
        """Laurent expansion of a spectral function with the default contour radius."""
        return self.functions(operator).laurent(SpectralFunction(function), chart, z0)

    def poles_table(self, operator: SpectralOperator, window: Tuple[float, float, float, float],
                    chart: Chart = Chart.A_Z,
                    function: Union[str, SpectralFunction] = SpectralFunction.ZETA) -> PoleReport:
        """
        Poles of a spectral function inside a window.

        Args:
            operator: Elliptic invertible model
            window: (re_min, re_max, im_min, im_max)
            chart: Variable convention of the report
            function: Spectral function examined

        Returns:
            PoleReport
        """
        return poles.poles_table(self.functions(operator), window, chart, function)

    def table(self, operator: SpectralOperator, function: Union[str, SpectralFunction],
              points: List[complex], chart: Chart = Chart.A_Z) -> List[Tuple[complex, Optional[complex]]]:
        """Values at several points; poles appear as None."""
        functions = self.functions(operator)
        rows = []
        for z in points:
            try:
                rows.append((complex(z), functions.evaluate(SpectralFunction(function), chart, z)))
            except PoleError:
                rows.append((complex(z), None))
        return rows

    def cut_identity_defect(self, operator: SpectralOperator, z: complex) -> Tuple[float, float]:
        """(consistent, literal) defects of the spectral-cut identity at z."""
        self._require_self_adjoint(operator)
        return poles.cut_identity_defect(self.functions(operator), z)

    def residue_identity_check(self, operator: SpectralOperator, sigma: float = 0.0,
                               k: int = 2) -> ResidueIdentityResult:
        """
        Compare Res^k η at σ with the spectral-cut residue and, when the
        model has a torus symbol, with m₁m₂·Wres^(k)(F|A|^{−σ}).

        Returns:
            ResidueIdentityResult; `bridged` is False without a symbol bridge
        """
        self._require_self_adjoint(operator)
        wres_value = None
        if has_symbol(operator):
            from wodzicki.service import WodzickiService
            wres_value = WodzickiService(self).sign_residue(operator, sigma, k)
        return poles.residue_identity_check(self.functions(operator), sigma, k, wres_value)

    def save_poles(self, report: PoleReport, path: str, fmt: str = "json") -> None:
        if fmt == "csv":
            self.store.save_csv(report, path)
        else:
            self.store.save_json(report, path)

    def load_poles(self, path: str) -> PoleReport:
        return self.store.load_json(path)

    @staticmethod
    def _require_self_adjoint(operator: SpectralOperator) -> None:
        if not operator.self_adjoint:
            raise ValueError(f"{operator.label()} is not self-adjoint")
