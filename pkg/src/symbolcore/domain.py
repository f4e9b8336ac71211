"""
Domain models for the bisingular symbol calculus.

This module defines the core data structures of the truncated classical
bisingular calculus on the model geometry circle × circle: bi-orders,
bihomogeneous components sampled on the product of cosphere bundles,
full classical symbols, sectors and the results of symbol-level checks.

Grid convention: every component is a complex array of shape (G1, 2, G2, 2)
over (θ₁, ω₁, θ₂, ω₂), θᵢ on the uniform grid 2πn/Gᵢ, ω index 0 ↦ +1 and
1 ↦ −1. A full symbol stores its components densely in a table of shape
(N1+1, N2+1, G1, 2, G2, 2); entry (j, k) has bi-degree (m1 − j, m2 − k).
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple, Union
import math

import numpy as np

Number = Union[int, float, complex]

# ω index 0 is the +1 point of the circle cosphere, index 1 the −1 point
OMEGA = np.array([1.0, -1.0])


class TruncationError(ValueError):
    """Raised when an operation asks for components beyond the available depth."""


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


def is_power_of_two(n: int) -> bool:
    """Check whether n is a positive power of two."""
    return n > 0 and (n & (n - 1)) == 0


def theta_grid(size: int) -> np.ndarray:
    """Uniform periodic grid on [0, 2π) with `size` points."""
    return 2.0 * np.pi * np.arange(size) / size


def mesh(grid: Tuple[int, int]) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Broadcastable coordinate arrays (θ₁, ω₁, θ₂, ω₂) for a grid.

    Args:
        grid: Grid sizes (G1, G2)

    Returns:
        Four arrays broadcasting to shape (G1, 2, G2, 2)
    """
    g1, g2 = grid
    theta1 = theta_grid(g1).reshape(g1, 1, 1, 1)
    omega1 = OMEGA.reshape(1, 2, 1, 1)
    theta2 = theta_grid(g2).reshape(1, 1, g2, 1)
    omega2 = OMEGA.reshape(1, 1, 1, 2)
    return theta1, omega1, theta2, omega2


def _close(x: Number, y: Number, tol: float = 1e-12) -> bool:
    return abs(complex(x) - complex(y)) <= tol


@dataclass(frozen=True)
class BiOrder:
    """Orders (m1, m2) of a bisingular symbol. Complex entries carry the z-dependent orders of powers."""

    m1: Number
    m2: Number

    def __post_init__(self):
        for name, value in (("m1", self.m1), ("m2", self.m2)):
            if not np.isfinite(complex(value)):
                raise ValueError(f"Order {name} must be finite, got {value}")

    def __add__(self, other: 'BiOrder') -> 'BiOrder':
        return BiOrder(self.m1 + other.m1, self.m2 + other.m2)

    def __neg__(self) -> 'BiOrder':
        return BiOrder(-self.m1, -self.m2)

    def conjugate(self) -> 'BiOrder':
        return BiOrder(self.m1.conjugate(), self.m2.conjugate())

    def degree(self, j: int, k: int) -> Tuple[Number, Number]:
        """Bi-degree of the (j, k) component."""
        return (self.m1 - j, self.m2 - k)

    def matches(self, other: 'BiOrder', tol: float = 1e-12) -> bool:
        return _close(self.m1, other.m1, tol) and _close(self.m2, other.m2, tol)

    @property
    def is_real(self) -> bool:
        return abs(complex(self.m1).imag) == 0 and abs(complex(self.m2).imag) == 0


@dataclass(frozen=True)
class ModelGeometry:
    """Dimensions of X₁ × X₂. Quadrature exists for circles only."""

    n1: int = 1
    n2: int = 1

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError(f"Dimensions must be positive, got ({self.n1}, {self.n2})")
        if (self.n1, self.n2) != (1, 1):
            raise ValueError("Quadrature rules are implemented for circle factors only (n1 = n2 = 1)")


def _check_grid_shape(values: np.ndarray) -> Tuple[int, int]:
    if values.ndim != 4 or values.shape[1] != 2 or values.shape[3] != 2:
        raise ValueError(f"Component grid must have shape (G1, 2, G2, 2), got {values.shape}")
    g1, g2 = values.shape[0], values.shape[2]
    for g in (g1, g2):
        if not is_power_of_two(g) or g < 16:
            raise ValueError(f"Grid sizes must be powers of two >= 16, got {g}")
    return g1, g2


@dataclass(frozen=True)
class BihomogeneousComponent:
    """
    One bihomogeneous term of a classical symbol sampled on the cospheres.

    The term is c(θ₁, ω₁, θ₂, ω₂)·|ξ₁|^{d₁}|ξ₂|^{d₂} with ωᵢ = sign ξᵢ.
    """

    degree: Tuple[Number, Number]
    values: np.ndarray
    evaluator: Optional[Callable] = None

    def __post_init__(self):
        values = np.array(self.values, dtype=complex)
        grid = _check_grid_shape(values)
        if not np.all(np.isfinite(values)):
            raise ValueError("Component values must be finite")
        if self.evaluator is not None:
            exact = np.broadcast_to(np.asarray(self.evaluator(*mesh(grid)), dtype=complex), values.shape)
            error = float(np.max(np.abs(exact - values)))
            if error > 1e-12:
                raise ValueError(f"Grid values disagree with the closed form by {error:.3e}")
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @property
    def grid(self) -> Tuple[int, int]:
        return self.values.shape[0], self.values.shape[2]


@dataclass(frozen=True)
class ExactFactor:
    """
    Exact one-factor symbol of a tensor-product multiplier or operator.

    `evaluate(theta_index, l)` returns the full symbol at grid indices
    `theta_index` (None for x-independent factors) and integer frequencies
    `l`, frequency zero included. `components` holds the classical expansion
    with shape (N+1, G, 2).
    """

    order: Number
    evaluate: Callable[[np.ndarray, np.ndarray], np.ndarray]
    components: np.ndarray


@dataclass(frozen=True)
class ExactSymbol:
    """Tensor product f₁(θ₁, ξ₁)·f₂(θ₂, ξ₂) of two exact factors."""

    factors: Tuple[ExactFactor, ExactFactor]


@dataclass(frozen=True)
class ClassicalBisingularSymbol:
    """
    Truncated classical bisingular symbol.

    `table[j, k]` is the component of bi-degree (m1 − j, m2 − k); `joint` is
    the joint principal symbol σ^{m1,m2} recorded at construction, which the
    compatibility check compares against the principal parts of σ₁ and σ₂.
    """

    order: BiOrder
    table: np.ndarray
    joint: np.ndarray
    multiplier: bool = False
    geometry: ModelGeometry = field(default_factory=ModelGeometry)
    exact: Optional[ExactSymbol] = None

    def __post_init__(self):
        table = np.array(self.table, dtype=complex)
        if table.ndim != 6:
            raise ValueError(f"Symbol table must have 6 axes (j, k, θ₁, ω₁, θ₂, ω₂), got {table.ndim}")
        _check_grid_shape(table[0, 0])
        if not np.all(np.isfinite(table)):
            raise ValueError("Symbol values must be finite")
        joint = np.array(self.joint, dtype=complex)
        if joint.shape != table.shape[2:]:
            raise ValueError(f"Joint symbol shape {joint.shape} does not match grid {table.shape[2:]}")
        table.setflags(write=False)
        joint.setflags(write=False)
        object.__setattr__(self, 'table', table)
        object.__setattr__(self, 'joint', joint)

    @property
    def depth(self) -> Tuple[int, int]:
        return self.table.shape[0] - 1, self.table.shape[1] - 1

    @property
    def grid(self) -> Tuple[int, int]:
        return self.table.shape[2], self.table.shape[4]

    @property
    def truncation_certificate(self) -> Tuple[Number, Number]:
        """Largest discarded bi-degree in each slot."""
        n1, n2 = self.depth
        return (self.order.m1 - n1 - 1, self.order.m2 - n2 - 1)

    def component(self, j: int, k: int) -> BihomogeneousComponent:
        """
        Component of bi-degree (m1 − j, m2 − k).

        Raises:
            TruncationError: If (j, k) lies beyond the depth
        """
        n1, n2 = self.depth
        if j < 0 or k < 0 or j > n1 or k > n2:
            raise TruncationError(f"Component ({j}, {k}) outside depth ({n1}, {n2})")
        return BihomogeneousComponent(degree=self.order.degree(j, k), values=self.table[j, k])

    def index_of_degree(self, d1: Number, d2: Number) -> Optional[Tuple[int, int]]:
        """
        Table index holding bi-degree (d1, d2), if the order lattice contains it.

        Returns None when the degree is not on the lattice (m1 − ℕ, m2 − ℕ).

        Raises:
            TruncationError: If the degree is on the lattice but beyond the depth
        """
        indices = []
        for m, d in ((self.order.m1, d1), (self.order.m2, d2)):
            shift = complex(m) - complex(d)
            j = round(shift.real)
            if abs(shift - j) > 1e-12 or j < 0:
                return None
            indices.append(j)
        n1, n2 = self.depth
        if indices[0] > n1 or indices[1] > n2:
            raise TruncationError(
                f"Bi-degree ({d1}, {d2}) needs component {tuple(indices)} beyond depth ({n1}, {n2})")
        return indices[0], indices[1]


@dataclass(frozen=True)
class PrincipalSymbols:
    """The two operator-valued principal symbols and the joint principal symbol."""

    sigma1: np.ndarray   # row j = 0: [k, θ₁, ω₁, θ₂, ω₂], classical in the second factor
    sigma2: np.ndarray   # column k = 0: [j, θ₁, ω₁, θ₂, ω₂], classical in the first factor
    joint: np.ndarray    # σ^{m1,m2} on the cospheres


@dataclass(frozen=True)
class CompatibilityResult:
    """Outcome of the compatibility check between σ₁, σ₂ and σ^{m1,m2}."""

    passed: bool
    max_error: float


@dataclass(frozen=True)
class Sector:
    """
    Closed sector Λ = {λ : |arg λ − axis_angle| ≤ half_angle} with keyhole radius epsilon.

    Λ_ε adds the disc of radius epsilon around the origin.
    """

    axis_angle: float
    half_angle: float
    epsilon: float = 1e-2

    def __post_init__(self):
        if not 0 < self.half_angle < math.pi:
            raise ValueError(f"Sector half angle must lie in (0, π), got {self.half_angle}")
        if self.epsilon <= 0:
            raise ValueError(f"Keyhole radius must be positive, got {self.epsilon}")

    def contains(self, lam: complex, margin: float = 0.0) -> bool:
        """Whether λ lies in Λ_ε (optionally enlarged by an angular margin)."""
        if abs(lam) <= self.epsilon:
            return True
        offset = (np.angle(lam) - self.axis_angle + math.pi) % (2 * math.pi) - math.pi
        return abs(offset) <= self.half_angle + margin

    def boundary_points(self, radii: np.ndarray) -> np.ndarray:
        """Points on the two rays of ∂Λ at the given radii."""
        rays = np.exp(1j * np.array([self.axis_angle - self.half_angle, self.axis_angle + self.half_angle]))
        return (np.asarray(radii).reshape(-1, 1) * rays.reshape(1, 2)).ravel()

    def sample_points(self, radii: np.ndarray, angles: int = 9) -> np.ndarray:
        """Points of Λ on a polar grid, boundary rays included."""
        offsets = np.linspace(-self.half_angle, self.half_angle, angles)
        directions = np.exp(1j * (self.axis_angle + offsets))
        return (np.asarray(radii).reshape(-1, 1) * directions.reshape(1, -1)).ravel()

    @classmethod
    def left_half_plane(cls, epsilon: float = 1e-2) -> 'Sector':
        return cls(axis_angle=math.pi, half_angle=math.pi / 2, epsilon=epsilon)

    @classmethod
    def upper_half_plane(cls, opening: float = 0.1, epsilon: float = 1e-2) -> 'Sector':
        """Upper half-plane sector kept `opening` radians away from the real axis."""
        return cls(axis_angle=math.pi / 2, half_angle=math.pi / 2 - opening, epsilon=epsilon)


@dataclass(frozen=True)
class EllipticityResult:
    """Outcome of the Λ-ellipticity check; `witness` names the first failing sample."""

    passed: bool
    constant: float
    witness: Optional[Dict[str, object]] = None
