"""
Contour integrals of λ^z against resolvents.

Keyhole integrals follow ∂Λ_ε in three pieces with mpmath.quad: the
outgoing ray, the incoming ray and the arc of radius ε outside the sector.
Rays are parametrised by r = ε·e^u, which turns algebraic decay in r into
exponential decay in u. Circle integrals use the trapezoidal rule, which
converges geometrically when the integrand is analytic in an annulus
around the circle.

All integrals are normalised as (2πi)^{−1}∮ λ^z (p − λ)^{−ℓ} dλ with p
encircled clockwise, so ℓ = 1 gives p^z.
"""

import cmath
import logging
import math

import mpmath as mp
import numpy as np

from symbolcore.calculus import binomial
from symbolcore.domain import Number, Sector

from .domain import AssumptionError, Contour, ContourIntegral, ContourKind, GeometryError

logger = logging.getLogger(__name__)

WORKING_DIGITS = 30
MAX_REDUCTION = 2
GEOMETRY_FLOOR = 1e-12


def branch_log(lam, axis: float) -> np.ndarray:
    """log λ with arg λ ∈ (axis − 2π, axis]."""
    lam = np.asarray(lam, dtype=complex)
    rotation = np.exp(-1j * (axis - math.pi))
    return np.log(np.abs(lam)) + 1j * (np.angle(lam * rotation) + axis - math.pi)


def branch_power(lam, z: Number, axis: float = math.pi) -> np.ndarray:
    """λ^z with the branch cut along the ray of angle `axis`."""
    return np.exp(z * branch_log(lam, axis))


def cut_distance(values, axis: float) -> np.ndarray:
    """Distance from each point to the ray {t·e^{i·axis} : t ≥ 0}."""
    values = np.asarray(values, dtype=complex)
    rotated = values * np.exp(-1j * axis)
    return np.where(rotated.real >= 0, np.abs(rotated.imag), np.abs(values))


def power_reduction(z: Number, decay: float = 0.0) -> int:
    """
    The k ≤ 2 of p^z = p^{z−k}·p^k.

    Returns the smallest k with Re(z − k) < −decay, or failing that the
    smallest with Re(z − k) < 0.

    Raises:
        AssumptionError: If Re z ≥ 2
    """
    real = complex(z).real
    for bound in (-decay, 0.0):
        k = max(0, math.floor(real - bound) + 1)
        if k <= MAX_REDUCTION:
            return k
    raise AssumptionError(f"Re z = {real} needs a reduction A^(z−k)∘A^k with k > {MAX_REDUCTION}")


def _ray_distance(p: complex, angle: float, start: float) -> float:
    """Distance from p to the ray {r·e^{i·angle} : r ≥ start}."""
    rotated = p * cmath.exp(-1j * angle)
    if rotated.real >= start:
        return abs(rotated.imag)
    return abs(p - start * cmath.exp(1j * angle))


def keyhole_margin(p: complex, sector: Sector) -> float:
    """
    Distance from p to ∂Λ_ε.

    Raises:
        GeometryError: If p lies in Λ_ε or on its boundary
    """
    if sector.contains(p):
        raise GeometryError(f"p = {p} lies in the sector Λ_ε and is not enclosed by its boundary")
    upper = sector.axis_angle + sector.half_angle
    lower = sector.axis_angle - sector.half_angle
    margin = min(_ray_distance(p, upper, sector.epsilon), _ray_distance(p, lower, sector.epsilon),
                 abs(abs(p) - sector.epsilon))
    if margin <= GEOMETRY_FLOOR * max(1.0, abs(p)):
        raise GeometryError(f"p = {p} lies on the keyhole contour")
    return margin


def circle_margin(p: complex, contour: Contour) -> float:
    """
    Smallest of the distances from p to the circle and from the circle to the branch cut.

    Raises:
        GeometryError: If p is not strictly enclosed or the circle meets the cut
    """
    inside = contour.radius - abs(p - contour.center)
    if inside <= GEOMETRY_FLOOR * max(1.0, abs(p)):
        raise GeometryError(f"p = {p} is not enclosed by the circle |λ − {contour.center}| = {contour.radius}")
    outside = float(cut_distance(contour.center, contour.branch_axis)) - contour.radius
    if outside <= GEOMETRY_FLOOR * max(1.0, abs(contour.center)):
        raise GeometryError(f"Circle |λ − {contour.center}| = {contour.radius} meets the branch cut")
    return min(inside, outside)


def _keyhole_integral(p: complex, w: complex, sector: Sector):
    """(2πi)^{−1}∮ λ^w (p − λ)^{−1} dλ along ∂Λ_ε for Re w < 0, with the quadrature error."""
    with mp.workdps(WORKING_DIGITS):
        point, exponent = mp.mpc(p), mp.mpc(w)
        eps = mp.mpf(sector.epsilon)
        outgoing = mp.mpf(sector.axis_angle) - mp.mpf(sector.half_angle)
        # incoming ray at angle axis + half, written with its branch argument
        incoming = mp.mpf(sector.axis_angle) + mp.mpf(sector.half_angle) - 2 * mp.pi

        def ray(angle):
            direction = mp.expj(angle)

            def integrand(u):
                r = eps * mp.exp(u)
                return mp.exp(exponent * (mp.log(r) + 1j * angle)) / (point - r * direction) * direction * r

            return integrand

        def arc(t):
            lam = eps * mp.expj(t)
            return mp.exp(exponent * (mp.log(eps) + 1j * t)) / (point - lam) * 1j * lam

        nodes = [0, mp.inf]
        if abs(p) > sector.epsilon:
            nodes = [0, mp.log(abs(point) / eps), mp.inf]
        out_value, out_error = mp.quad(ray(outgoing), nodes, error=True)
        in_value, in_error = mp.quad(ray(incoming), nodes, error=True)
        arc_value, arc_error = mp.quad(arc, [incoming, outgoing], error=True)
        value = (out_value - in_value + arc_value) / (2j * mp.pi)
        error = (out_error + in_error + arc_error) / (2 * mp.pi)
        return complex(value), float(error)


def _circle_integral(p: complex, z: complex, contour: Contour):
    theta = 2.0 * np.pi * np.arange(contour.nodes) / contour.nodes
    offsets = contour.radius * np.exp(1j * theta)
    lam = contour.center + offsets
    terms = branch_power(lam, z, contour.branch_axis) * offsets / (lam - p)
    value = complex(np.mean(terms))
    return value, abs(value - complex(np.mean(terms[::2])))


def contour_power(p: Number, z: Number, contour: Contour) -> ContourIntegral:
    """
    p^z as the contour integral (2πi)^{−1}∮ λ^z (p − λ)^{−1} dλ.

    Keyhole integrals need Re z < 0; other exponents with Re z < 2 go
    through p^{z−k}·p^k. Circle integrals take any z.

    Raises:
        GeometryError: If p lies on the contour, outside it, or on the branch cut
        AssumptionError: If a keyhole integral needs a reduction beyond k = 2
    """
    p, z = complex(p), complex(z)
    if p == 0:
        raise GeometryError("p = 0 is the branch point of λ^z")
    if contour.kind == ContourKind.CIRCLE:
        margin = circle_margin(p, contour)
        value, error = _circle_integral(p, z, contour)
        logger.debug(f"Circle integral for {p}^{z}: margin {margin:.3e}, error {error:.1e}")
        return ContourIntegral(value=value, margin=margin, error=error)

    margin = keyhole_margin(p, contour.sector)
    k = power_reduction(z, decay=1.0)
    value, error = _keyhole_integral(p, z - k, contour.sector)
    factor = p ** k
    logger.debug(f"Keyhole integral for {p}^{z} with reduction k = {k}: margin {margin:.3e}, error {error:.1e}")
    return ContourIntegral(value=value * factor, margin=margin, error=error * abs(factor), reduction=k)


def cauchy_kernel(values, z: Number, power: int, axis: float = math.pi, nodes: int = 64) -> np.ndarray:
    """
    (2πi)^{−1}∮ λ^z (p − λ)^{−power} dλ at every p in `values`.

    Each p gets its own clockwise circle with radius half its distance to
    the branch cut; the keyhole deforms onto these circles without crossing
    a singularity.

    Raises:
        GeometryError: If some p lies on the branch cut
    """
    values = np.asarray(values, dtype=complex)
    radius = 0.5 * cut_distance(values, axis)
    if np.any(radius <= GEOMETRY_FLOOR * np.maximum(1.0, np.abs(values))):
        raise GeometryError(f"A point lies on the branch cut of λ^z along angle {axis}")
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    offsets = radius[..., np.newaxis] * np.exp(1j * theta)
    integrand = branch_power(values[..., np.newaxis] + offsets, z, axis) * offsets ** (1 - power)
    return (-1) ** (power + 1) * np.mean(integrand, axis=-1)


def closed_cauchy_kernel(values, z: Number, power: int, axis: float = math.pi) -> np.ndarray:
    """Closed form (−1)^{ℓ+1}·binom(z, ℓ−1)·p^{z−ℓ+1} of `cauchy_kernel`."""
    return (-1) ** (power + 1) * binomial(z, power - 1) * branch_power(values, z - power + 1, axis)
