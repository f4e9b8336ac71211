"""
Holomorphic functional calculus for models with enumerable spectrum.

f(A) maps every enumerated eigenvalue λ to the Cauchy integral
(2πi)^{−1}∮ f(ζ)(ζ − λ)^{−1} dζ, which is cross-checked against f(λ).
"""

import logging
from typing import Callable, List, Optional

import numpy as np

from spectra.domain import SpectralOperator
from spectra.enumeration import eigenvalues
from spectra.models import make_model

from .contours import GEOMETRY_FLOOR
from .domain import Contour, ContourKind, GeometryError, HolomorphicImage

logger = logging.getLogger(__name__)

LOCAL_RADIUS = 0.5
IMAGINARY_TOLERANCE = 1e-12


def _local_circles(points: np.ndarray, nodes: int):
    """Circles around each λ of radius ½·min(1, |λ|), so f may be singular at 0."""
    magnitude = np.abs(points)
    radius = LOCAL_RADIUS * np.where(magnitude > 0, np.minimum(1.0, magnitude), 1.0)
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    return points[:, np.newaxis], radius[:, np.newaxis] * np.exp(1j * theta)


def _enclosing_circle(points: np.ndarray, contour: Contour):
    distance = contour.radius - np.abs(points - contour.center)
    if np.any(distance <= GEOMETRY_FLOOR * np.maximum(1.0, np.abs(points))):
        index = int(np.argmin(distance))
        raise GeometryError(f"Eigenvalue {points[index]} is not enclosed by the circle "
                            f"|ζ − {contour.center}| = {contour.radius}")
    theta = 2.0 * np.pi * np.arange(contour.nodes) / contour.nodes
    offsets = contour.radius * np.exp(1j * theta)
    return np.full((points.size, 1), contour.center), np.broadcast_to(offsets, (points.size, contour.nodes))


def holomorphic_image(f: Callable[[np.ndarray], np.ndarray], operator: SpectralOperator, count: int = 100,
                      contour: Optional[Contour] = None, nodes: int = 64) -> HolomorphicImage:
    """
    f(A) on the first `count` distinct eigenvalues of A.

    Args:
        f: numpy-vectorised function analytic near the spectrum prefix
        operator: Model with an enumerable spectrum
        count: Number of distinct eigenvalues
        contour: Circle enclosing the prefix; None uses a small circle per eigenvalue
        nodes: Trapezoidal nodes of the per-eigenvalue circles

    Returns:
        HolomorphicImage whose operator is the explicit model of the mapped values

    Raises:
        GeometryError: If the contour misses an eigenvalue or is a keyhole
        ValueError: If f maps the spectrum off the real axis
    """
    data = eigenvalues(operator, count)
    points = np.array([datum.value for datum in data], dtype=complex)
    if contour is None:
        centers, offsets = _local_circles(points, nodes)
    elif contour.kind == ContourKind.CIRCLE:
        centers, offsets = _enclosing_circle(points, contour)
    else:
        raise GeometryError("The functional calculus integrates over circles")

    zeta = centers + offsets
    values = np.mean(np.asarray(f(zeta), dtype=complex) * offsets / (zeta - points[:, np.newaxis]), axis=1)
    direct = np.asarray(f(points), dtype=complex)
    scale = max(1.0, float(np.max(np.abs(direct)))) if direct.size else 1.0
    error = float(np.max(np.abs(values - direct))) / scale if direct.size else 0.0
    if np.any(np.abs(values.imag) > IMAGINARY_TOLERANCE * np.maximum(1.0, np.abs(values))):
        raise ValueError("f maps the spectrum off the real axis; explicit models hold real eigenvalues")

    mapped: List[float] = [float(v) for v in values.real]
    multiplicities = [datum.multiplicity for datum in data]
    image = make_model("explicit", {"values": mapped, "multiplicities": multiplicities,
                                    "order": [0.0, 0.0]})
    logger.debug(f"Holomorphic image of {len(data)} eigenvalues of {operator.label()}: "
                 f"relative error {error:.1e}")
    return HolomorphicImage(operator=image, values=list(values), direct=list(direct), error=error)
