"""
Constructors for classical bisingular symbols.

Components may be given as arrays on the grid, scalars, or callables of the
broadcast coordinates (θ₁, ω₁, θ₂, ω₂). Every constructor records the joint
principal symbol from the (0, 0) component, so symbols built here satisfy the
compatibility condition by construction.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from .domain import (
    BiOrder, ClassicalBisingularSymbol, ExactFactor, ExactSymbol, Number,
    mesh, theta_grid,
)

ComponentSpec = Union[Number, np.ndarray, Callable]


@dataclass
class CalculusConfig:
    """Default truncation and grid for constructed symbols."""
    depth: Tuple[int, int] = (4, 4)   # N1 = N2 = 4
    grid: Tuple[int, int] = (16, 16)  # G1 = G2 = 16


DEFAULTS = CalculusConfig()


def empty_table(depth: Tuple[int, int], grid: Tuple[int, int]) -> np.ndarray:
    """Zero table of shape (N1+1, N2+1, G1, 2, G2, 2)."""
    return np.zeros((depth[0] + 1, depth[1] + 1, grid[0], 2, grid[1], 2), dtype=complex)


def evaluate_component(spec: ComponentSpec, grid: Tuple[int, int]) -> np.ndarray:
    """Sample a component specification on the grid."""
    shape = (grid[0], 2, grid[1], 2)
    if callable(spec):
        values = spec(*mesh(grid))
    else:
        values = spec
    return np.array(np.broadcast_to(np.asarray(values, dtype=complex), shape))


def from_table(order: BiOrder, table: np.ndarray, multiplier: bool = False,
               exact: Optional[ExactSymbol] = None) -> ClassicalBisingularSymbol:
    """Wrap a component table, recording its (0, 0) entry as joint principal symbol."""
    return ClassicalBisingularSymbol(order=order, table=table, joint=table[0, 0].copy(),
                                     multiplier=multiplier, exact=exact)


def from_components(order: BiOrder,
                    components: Dict[Tuple[int, int], ComponentSpec],
                    depth: Optional[Tuple[int, int]] = None,
                    grid: Optional[Tuple[int, int]] = None,
                    multiplier: bool = False) -> ClassicalBisingularSymbol:
    """
    Build a symbol from a sparse table of component specifications.

    Args:
        order: Bi-order (m1, m2)
        components: Mapping (j, k) -> component; missing entries are zero
        depth: Truncation (N1, N2), defaults to (4, 4)
        grid: Grid sizes (G1, G2), defaults to (16, 16)
        multiplier: True when no component depends on θ

    Returns:
        ClassicalBisingularSymbol with the given components

    Raises:
        ValueError: If a component index lies outside the depth
    """
    depth = depth or DEFAULTS.depth
    grid = grid or DEFAULTS.grid
    table = empty_table(depth, grid)
    for (j, k), spec in components.items():
        if not (0 <= j <= depth[0] and 0 <= k <= depth[1]):
            raise ValueError(f"Component index ({j}, {k}) outside depth {depth}")
        table[j, k] = evaluate_component(spec, grid)
    return from_table(order, table, multiplier)


def identity_symbol(depth: Optional[Tuple[int, int]] = None,
                    grid: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
    """Unit of composition: order (0, 0), leading component 1."""
    return from_components(BiOrder(0, 0), {(0, 0): 1.0}, depth, grid, multiplier=True)


def zero_symbol(order: BiOrder, depth: Optional[Tuple[int, int]] = None,
                grid: Optional[Tuple[int, int]] = None) -> ClassicalBisingularSymbol:
    return from_components(order, {}, depth, grid, multiplier=True)


def tensor_symbol(first: ExactFactor, second: ExactFactor,
                  depth: Optional[Tuple[int, int]] = None,
                  multiplier: bool = True) -> ClassicalBisingularSymbol:
    """
    Tensor product of two one-factor classical symbols.

    Each factor carries its expansion as an array of shape (N+1, G, 2); the
    product table is c1_j(θ₁, ω₁)·c2_k(θ₂, ω₂). The exact factors are kept so
    the canonical trace can sum the full symbol on the frequency lattice.
    """
    c1, c2 = np.asarray(first.components, dtype=complex), np.asarray(second.components, dtype=complex)
    if depth is None:
        depth = (c1.shape[0] - 1, c2.shape[0] - 1)
    if depth[0] > c1.shape[0] - 1 or depth[1] > c2.shape[0] - 1:
        raise ValueError(f"Requested depth {depth} exceeds factor expansions "
                         f"({c1.shape[0] - 1}, {c2.shape[0] - 1})")
    table = np.einsum('jab,kcd->jkabcd', c1[:depth[0] + 1], c2[:depth[1] + 1])
    return from_table(BiOrder(first.order, second.order), table, multiplier,
                      exact=ExactSymbol(factors=(first, second)))


def one_factor(order: Number, components: Sequence[ComponentSpec], grid_size: int,
               evaluate: Optional[Callable] = None) -> ExactFactor:
    """
    One-factor classical symbol with components given as specs of (θ, ω).

    Without an explicit evaluator the full symbol is the finite expansion,
    with frequency zero excised.
    """
    theta = theta_grid(grid_size).reshape(-1, 1)
    omega = np.array([1.0, -1.0]).reshape(1, 2)
    rows = []
    for spec in components:
        values = spec(theta, omega) if callable(spec) else spec
        rows.append(np.array(np.broadcast_to(np.asarray(values, dtype=complex), (grid_size, 2))))
    table = np.stack(rows)

    if evaluate is None:
        def evaluate(theta_points, frequencies):
            return expansion_values(order, table, theta_points, frequencies)

    return ExactFactor(order=order, evaluate=evaluate, components=table)


def expansion_values(order: Number, components: np.ndarray, theta_points: np.ndarray,
                     frequencies: np.ndarray) -> np.ndarray:
    """
    Value of a finite one-factor expansion Σ_j c_j(θ, sign l)|l|^{m−j}.

    `theta_points` must be grid indices aligned with the component grid
    (an integer array) or None for x-independent components.
    """
    frequencies = np.asarray(frequencies)
    safe = np.where(frequencies == 0, 1, np.abs(frequencies)).astype(float)
    omega_index = np.where(frequencies < 0, 1, 0)
    total = np.zeros(np.broadcast(theta_points, frequencies).shape if theta_points is not None
                     else frequencies.shape, dtype=complex)
    for j in range(components.shape[0]):
        if theta_points is None:
            coefficient = components[j, 0, omega_index]
        else:
            coefficient = components[j, theta_points, omega_index]
        total = total + coefficient * safe ** (order - j)
    return np.where(frequencies == 0, 0.0, total)


def random_symbol(rng: np.random.Generator, order: BiOrder,
                  depth: Optional[Tuple[int, int]] = None,
                  grid: Optional[Tuple[int, int]] = None,
                  modes: int = 2) -> ClassicalBisingularSymbol:
    """
    Random x-dependent classical symbol with trigonometric-polynomial components.

    Component (j, k) carries Fourier modes |q| ≤ `modes` in each θ, with
    amplitudes decaying like (1 + |q|)^{-2}. Band limits keep all pairwise
    products alias-free on grids of size ≥ 16.
    """
    depth = depth or DEFAULTS.depth
    grid = grid or DEFAULTS.grid
    theta1, _, theta2, _ = mesh(grid)
    q = np.arange(-modes, modes + 1)
    weights = 1.0 / (1.0 + np.abs(q.reshape(-1, 1))) ** 2 / (1.0 + np.abs(q.reshape(1, -1))) ** 2
    table = empty_table(depth, grid)
    for j in range(depth[0] + 1):
        for k in range(depth[1] + 1):
            coefficients = (rng.standard_normal((2, 2, q.size, q.size))
                            + 1j * rng.standard_normal((2, 2, q.size, q.size))) * weights
            values = np.zeros((grid[0], 2, grid[1], 2), dtype=complex)
            for a in range(2):
                for b in range(2):
                    plane = np.tensordot(np.exp(1j * np.outer(theta1.ravel(), q)),
                                         coefficients[a, b], axes=(1, 0))
                    plane = plane @ np.exp(1j * np.outer(q, theta2.ravel()))
                    values[:, a, :, b] = plane
            table[j, k] = values
    return from_table(order, table)


def random_elliptic_symbol(rng: np.random.Generator, order: BiOrder,
                           depth: Optional[Tuple[int, int]] = None,
                           grid: Optional[Tuple[int, int]] = None,
                           modes: int = 2) -> ClassicalBisingularSymbol:
    """
    Random symbol with a real positive leading component.

    The (0, 0) component is 2 + 0.5·(real trigonometric polynomial bounded
    by 1), so it stays in [1.5, 2.5] on the cospheres; lower components are
    random and scaled by 0.1.
    """
    base = random_symbol(rng, order, depth, grid, modes)
    table = np.array(base.table) * 0.1
    leading = np.real(base.table[0, 0])
    leading = leading / max(float(np.max(np.abs(leading))), 1e-300)
    table[0, 0] = 2.0 + 0.5 * leading
    return from_table(order, table)
