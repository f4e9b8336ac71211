"""
Wodzicki service providing unified access to residue functionals.

This module provides the main public interface for Wres^(k) by the spectral
and quadrature routes, restricted traces, the trace and idempotent
properties of Wres², and the link between η residues and residue densities.
"""

import cmath
import logging
import math
from typing import Optional, Union

from meromorphic.domain import Chart, SpectralFunction
from meromorphic.service import MeromorphicService
from spectra.bridge import exact_symbol, has_symbol
from spectra.domain import NoTorusSymbolError, SpectralOperator
from spectra.models import make_model, tensor
from symbolcore.domain import ClassicalBisingularSymbol
from symbolcore.legs import LegTensorSymbol

from . import residues
from .domain import EtaResidueComparison, ResidueResult

logger = logging.getLogger(__name__)

MATCH_TOLERANCE = 1e-6


def _density_factor(factor: SpectralOperator, sigma: float, signed: bool) -> SpectralOperator:
    data = factor.circle
    scale = abs(data.scale) ** (-sigma) * (math.copysign(1.0, data.scale) if signed else 1.0)
    return make_model("circle_power", {"a": data.shift, "p": -data.power * sigma,
                                       "parity": data.parity if signed else 0, "scale": scale})


def density_operator(operator: SpectralOperator, sigma: float, signed: bool = True) -> SpectralOperator:
    """
    F·|A|^{−σ} (signed) or |A|^{−σ} of a circle or circle-tensor model, F = A|A|^{−1}.

    Raises:
        NoTorusSymbolError: For models without a torus symbol
    """
    if not has_symbol(operator):
        raise NoTorusSymbolError(f"{operator.label()} has no torus symbol")
    if not operator.is_tensor:
        return _density_factor(operator, sigma, signed)
    first, second = (_density_factor(f, sigma, signed) for f in operator.factors)
    scale = abs(operator.scale) ** (-sigma) * (math.copysign(1.0, operator.scale) if signed else 1.0)
    return tensor(first, second, scale)


def _aligned_generator(factor: Optional[SpectralOperator]) -> SpectralOperator:
    shift = factor.circle.shift if factor is not None else 0.5
    return make_model("abs_circle_dirac", {"a": shift})


class WodzickiService:
    """
    Main service for residue functionals.

    All computations are pure; results carry error certificates.
    """

    def __init__(self, meromorphic: Optional[MeromorphicService] = None):
        self.meromorphic = meromorphic or MeromorphicService()

    def wres2_quadrature(self, a: ClassicalBisingularSymbol) -> ResidueResult:
        """
        Wres² by cosphere quadrature.

        Raises:
            OrderError: If the (−1, −1) component lies beyond the depth
        """
        return residues.wres2_quadrature(a)

    def wres_spectral(self, operator: Optional[SpectralOperator], q1: SpectralOperator,
                      q2: SpectralOperator, k: int = 2) -> ResidueResult:
        """
        Wres^(k) as Res^k at 0 of Tr(A·Q₁^{−z}⊗Q₂^{−z}).

        Args:
            operator: Model commuting with Q₁⊗Q₂ (None for the identity)
            q1, q2: Positive order-one circle generators
            k: Residue order

        Returns:
            ResidueResult naming the generators used
        """
        return residues.wres_spectral(operator, q1, q2, k, self.meromorphic.hurwitz_config)

    def restricted_trace(self, a: Union[LegTensorSymbol, ClassicalBisingularSymbol], factor: int = 1) -> complex:
        return residues.restricted_trace(a, factor)

    def commutator_residue(self, a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol) -> ResidueResult:
        return residues.commutator_residue(a, b)

    def projection_residue(self, p: Union[ClassicalBisingularSymbol, LegTensorSymbol, SpectralOperator]) -> ResidueResult:
        """
        Wres² of an idempotent.

        Raises:
            PreconditionError: If the input is not idempotent
        """
        return residues.projection_residue(p)

    def density_residue(self, operator: SpectralOperator, sigma: float, k: int = 2,
                        signed: bool = True) -> complex:
        """
        Wres^(k)(F·|A|^{−σ}), or of |A|^{−σ} when `signed` is False.

        k = 2 uses quadrature of the exact symbol; k = 1 uses the spectral
        route with generators |D + a| aligned to the factors of A.
        """
        density = density_operator(operator, sigma, signed)
        if k == 2:
            return self.wres2_quadrature(exact_symbol(density)).value
        factors = operator.factors if operator.is_tensor else (operator, None)
        q1, q2 = (_aligned_generator(f) for f in factors)
        return self.wres_spectral(density, q1, q2, k=1).value

    def sign_residue(self, operator: SpectralOperator, sigma: float, k: int = 2) -> complex:
        """m₁m₂·Wres^(k)(F·|A|^{−σ})."""
        m1, m2 = (complex(m).real for m in (operator.order.m1, operator.order.m2))
        return m1 * m2 * self.density_residue(operator, sigma, k)

    def eta_residue_via_wres(self, operator: SpectralOperator, sigma: float, k: int = 2) -> EtaResidueComparison:
        """
        Res^k_{z=σ} η(A, z) against m₁m₂·Wres^(k)(F·|A|^{−σ}).

        Alternative normalizations are computed alongside and reported in
        `candidates`; `matching` lists those agreeing with the left-hand side.

        Raises:
            NoTorusSymbolError: For models without a torus symbol
        """
        lhs = self.meromorphic.laurent(operator, SpectralFunction.ETA, sigma, chart=Chart.A_MINUS_Z).residue(k)
        rhs = self.sign_residue(operator, sigma, k)
        sign_density = self.density_residue(operator, sigma, k)
        modulus_density = self.density_residue(operator, sigma, k, signed=False)
        candidates = {
            "m1m2_wres_sign": rhs,
            "wres_sign": sign_density,
            "2pi_i_wres_positive_projection": 2j * cmath.pi * 0.5 * (modulus_density + sign_density),
        }
        matching = [name for name, value in candidates.items() if abs(value - lhs) <= MATCH_TOLERANCE]
        logger.info(f"η residue of {operator.label()} at σ = {sigma}: lhs {lhs}, matching {matching}")
        return EtaResidueComparison(sigma=sigma, k=k, lhs=lhs, rhs=rhs, discrepancy=abs(lhs - rhs),
                                    candidates=candidates, matching=matching)
