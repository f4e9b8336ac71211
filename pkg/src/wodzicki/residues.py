"""
Residue functionals on bisingular symbols and model operators.

Quadrature route: Wres²(a) = (2π)^{−2} ∫ σ^{−1,−1}(a) over the product of
the cospheres {θ}×{ω = ±1}, arclength in θ and counting measure in ω. The
trapezoidal rule is spectrally accurate for the periodic components, so the
integral is the grid mean times the number of ω points.

Spectral route: Res^k at z = 0 of Tr(A·Q₁^{−z}⊗Q₂^{−z}).
"""

import logging
from typing import Optional, Union

import numpy as np

from meromorphic.continuation import double_zeta
from meromorphic.domain import HurwitzConfig
from meromorphic.laurent import laurent_at
from spectra.domain import ModelKind, SpectralOperator
from symbolcore.calculus import combine, commutator, compose, sup_norm
from symbolcore.domain import ClassicalBisingularSymbol, DomainError, TruncationError
from symbolcore.legs import LegTensorSymbol
from symbolcore.oracle import ModeLatticeOracle

from .domain import OrderError, PreconditionError, ResidueResult, Route

logger = logging.getLogger(__name__)

CERTIFICATE_FLOOR = 1e-15
SPECTRAL_RADIUS = 0.25


def _cosphere_mean(values: np.ndarray) -> complex:
    """(2π)^{−n} ∫ over cospheres of one factor or both: grid mean times ω count."""
    return complex(np.mean(values) * (2 ** (values.ndim // 2)))


def wres2_quadrature(a: ClassicalBisingularSymbol) -> ResidueResult:
    """
    Wres² by cosphere quadrature of the (−1, −1) component.

    Symbols whose order lattice misses (−1, −1) have residue 0.

    Raises:
        OrderError: If (−1, −1) lies on the lattice but beyond the depth
    """
    try:
        index = a.index_of_degree(-1, -1)
    except TruncationError as e:
        raise OrderError(f"Wres² needs the (−1, −1) component: {e}") from e
    if index is None:
        return ResidueResult(value=0.0j, route=Route.QUADRATURE, k=2, certificate=0.0)
    values = np.asarray(a.table[index])
    value = _cosphere_mean(values)
    coarse = _cosphere_mean(values[::2, :, ::2, :])
    certificate = max(abs(value - coarse), CERTIFICATE_FLOOR * max(1.0, abs(value)))
    logger.debug(f"Wres² quadrature on grid {a.grid}: {value} (certificate {certificate:.1e})")
    return ResidueResult(value=value, route=Route.QUADRATURE, k=2, certificate=certificate)


def wres_spectral(operator: Optional[SpectralOperator], q1: SpectralOperator, q2: SpectralOperator,
                  k: int = 2, config: Optional[HurwitzConfig] = None) -> ResidueResult:
    """
    Wres^(k) of a model operator through the double ζ of the constant family.

    Args:
        operator: Tensor of circle multipliers commuting with Q₁⊗Q₂, or None for the identity
        q1, q2: Positive order-one circle generators
        k: 1 or 2
        config: Euler–Maclaurin parameters of the Hurwitz values

    Raises:
        UnsupportedModelError: For non-commuting inputs
    """
    if k not in (1, 2):
        raise ValueError(f"Residue order must be 1 or 2, got {k}")
    expansion = laurent_at(lambda z: double_zeta(operator, q1, q2, z, z, config), 0.0, radius=SPECTRAL_RADIUS)
    generators = f"{q1.label()}⊗{q2.label()}"
    logger.debug(f"Wres^({k}) spectral with Q = {generators}: {expansion.residue(k)}")
    return ResidueResult(value=expansion.residue(k), route=Route.SPECTRAL, k=k,
                         certificate=expansion.error_bound, generators=generators)


def restricted_trace(a: Union[LegTensorSymbol, ClassicalBisingularSymbol], factor: int = 1,
                     window: int = 256) -> complex:
    """
    Restricted trace Tr₁ (factor 1) or Tr₂ (factor 2).

    Tr₁(A) = (2π)^{−1} ∫_{S*X₁} Tr σ₁^{−1}(A) dω₁: the degree −1 part in the
    first factor, integrated over its cosphere, with the operator on the
    second factor traced. Leg tensors trace their leg matrix; classical
    symbols trace the second factor on the oracle mode window.

    Raises:
        DomainError: If the traced factor is not trace-class
        OrderError: If the needed component lies beyond the depth
    """
    if factor not in (1, 2):
        raise ValueError(f"Factor must be 1 or 2, got {factor}")
    if isinstance(a, LegTensorSymbol):
        if a.slot != factor - 1:
            # the classical factor is traced: trace-class only for order < −1, and σ has no finite degree
            if not complex(a.factor.order).real < -1:
                raise DomainError(f"Classical leg of order {a.factor.order} is not trace-class")
            return 0.0j
        components = np.asarray(a.factor.components)
        shift = complex(a.factor.order) + 1
        j = int(round(shift.real))
        if abs(shift - j) > 1e-12 or j < 0:
            return 0.0j
        if j >= components.shape[0]:
            raise OrderError(f"Degree −1 component needs index {j} beyond depth {components.shape[0] - 1}")
        return _cosphere_mean(components[j]) * a.leg.trace()

    traced_order = complex(a.order.m2 if factor == 1 else a.order.m1)
    if abs(traced_order.imag) > 1e-12 or not traced_order.real < -1:
        raise DomainError(f"Factor {3 - factor} of order {traced_order} is not trace-class")
    try:
        index = a.index_of_degree(-1, a.order.m2) if factor == 1 else a.index_of_degree(a.order.m1, -1)
    except TruncationError as e:
        raise OrderError(str(e)) from e
    if index is None:
        return 0.0j
    oracle = ModeLatticeOracle(window)
    n1, n2 = a.depth
    total = 0.0j
    for l in oracle.frequencies:
        if l == 0:
            continue
        omega = 0 if l > 0 else 1
        if factor == 1:
            block = a.table[index[0], :, :, :, :, omega]           # (k, θ₁, ω₁, θ₂)
            powers = float(abs(l)) ** (a.order.m2 - np.arange(n2 + 1))
            density = np.tensordot(powers, block, axes=(0, 0))    # (θ₁, ω₁, θ₂)
            total += _cosphere_mean(density.mean(axis=2))
        else:
            block = a.table[:, index[1], :, omega, :, :]          # (j, θ₁, θ₂, ω₂)
            powers = float(abs(l)) ** (a.order.m1 - np.arange(n1 + 1))
            density = np.tensordot(powers, block, axes=(0, 0))    # (θ₁, θ₂, ω₂)
            total += _cosphere_mean(density.mean(axis=0))
    return total


def commutator_residue(a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol) -> ResidueResult:
    """
    Wres² of a∘b − b∘a.

    Raises:
        OrderError: If the composition depth does not reach (−1, −1)
    """
    return wres2_quadrature(commutator(a, b))


def projection_residue(p: Union[ClassicalBisingularSymbol, LegTensorSymbol, SpectralOperator],
                       tolerance: float = 1e-8) -> ResidueResult:
    """
    Wres² of an idempotent.

    Raises:
        PreconditionError: If p∘p − p exceeds the tolerance, with the defect attached
    """
    if isinstance(p, SpectralOperator):
        if not p.is_finite:
            raise PreconditionError(f"{p.label()} is not a finite-rank projection")
        if p.kind == ModelKind.FINITE_RANK_PROJECTION:
            values = [p.scale]
        else:
            values = [float(v) * p.scale for v in p.params["values"]]
        defect = max(abs(v * v - v) for v in values)
        if defect > tolerance:
            raise PreconditionError(f"{p.label()} is not idempotent (defect {defect:.2e})", defect)
        return ResidueResult(value=0.0j, route=Route.QUADRATURE, k=2, certificate=0.0)

    if isinstance(p, LegTensorSymbol):
        defect = p.idempotency_defect()
        if defect > tolerance:
            raise PreconditionError(f"Leg tensor is not idempotent (defect {defect:.2e})", defect)
        return wres2_quadrature(p.to_symbol())

    defect = sup_norm(combine(compose(p, p), p, 1.0, -1.0))
    if defect > tolerance:
        raise PreconditionError(f"Symbol is not idempotent (defect {defect:.2e})", defect)
    return wres2_quadrature(p)
