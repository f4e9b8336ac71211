"""
Pole tables and residue relations of continued spectral functions.
"""

import cmath
import logging
import math
from typing import Optional, Sequence, Tuple

from .continuation import SpectralFunctions
from .domain import Chart, PoleEntry, PoleReport, ResidueIdentityResult, SpectralFunction

logger = logging.getLogger(__name__)

Window = Tuple[float, float, float, float]


def _inside(z: complex, window: Window) -> bool:
    re_min, re_max, im_min, im_max = window
    return re_min <= z.real <= re_max and im_min <= z.imag <= im_max


def poles_table(functions: SpectralFunctions, window: Window, chart: Chart = Chart.A_Z,
                function: SpectralFunction = SpectralFunction.ZETA) -> PoleReport:
    """
    Detected poles of a spectral function inside a window.

    Every predicted location (j − n)/m of each factor is examined by a
    contour; a candidate is kept when c₋₁ or c₋₂ exceeds the pole
    tolerance and flagged order 2 when c₋₂ does.

    Args:
        functions: Evaluators of one model
        window: (re_min, re_max, im_min, im_max)
        chart: Variable convention of the report
        function: Spectral function examined

    Returns:
        PoleReport in increasing order of location
    """
    re_min, re_max, im_min, im_max = window
    if re_min > re_max or im_min > im_max:
        raise ValueError(f"Empty window {window}")
    chart, function = Chart(chart), SpectralFunction(function)
    tolerance = functions.laurent_config.pole_tolerance
    report = PoleReport(chart=chart, function=function)
    for location, _ in functions.candidates(chart):
        z0 = complex(location)
        if not _inside(z0, window):
            continue
        report.candidates.append(z0)
        expansion = functions.laurent(function, chart, z0)
        order = expansion.pole_order(tolerance)
        if order == 0:
            continue
        report.entries.append(PoleEntry(location=z0, order=order, c_minus2=expansion.coefficient(-2),
                                        c_minus1=expansion.coefficient(-1), error_bound=expansion.error_bound))
    logger.debug(f"{len(report.entries)} poles among {len(report.candidates)} candidates "
                 f"of {function.value}({functions.operator.label()})")
    return report


def cut_residue(functions: SpectralFunctions, k: int, point: complex = 0.0) -> complex:
    """Res^k of ζ↓ − ζ↑ in the A^z variable."""
    down = functions.laurent(SpectralFunction.ZETA_DOWN, Chart.A_Z, point)
    up = functions.laurent(SpectralFunction.ZETA_UP, Chart.A_Z, point)
    return down.residue(k) - up.residue(k)


def cut_identity_defect(functions: SpectralFunctions, z: complex) -> Tuple[float, float]:
    """
    Defects of the spectral-cut identity at a regular point z.

    Returns:
        (consistent, literal): |ζ↓ − ζ↑ + (1 − e^{iπz})ζ↑ − (1 − e^{iπz})η(A, −z)| and
        |ζ↓ − ζ↑ + (1 − e^{iπz})ζ↑ − η(A, z)|
    """
    z = complex(z)
    up = functions.evaluate(SpectralFunction.ZETA_UP, Chart.A_Z, z)
    down = functions.evaluate(SpectralFunction.ZETA_DOWN, Chart.A_Z, z)
    factor = 1.0 - cmath.exp(1j * math.pi * z)
    combination = down - up + factor * up
    reflected = functions.evaluate(SpectralFunction.ETA, Chart.A_MINUS_Z, -z)
    direct = functions.evaluate(SpectralFunction.ETA, Chart.A_MINUS_Z, z)
    return abs(combination - factor * reflected), abs(combination - direct)


def residue_identity_check(functions: SpectralFunctions, sigma: float = 0.0, k: int = 2,
                           wres_value: Optional[complex] = None) -> ResidueIdentityResult:
    """
    Compare Res^k_{z=σ} η with the cut residue (σ = 0 only) and with a
    residue-density value supplied by the caller.

    Args:
        functions: Evaluators of one model
        sigma: Point of the η residue
        k: Residue order, 1 or 2
        wres_value: m₁m₂·Wres^(k)(F|A|^{−σ}), or None without a symbol bridge

    Returns:
        ResidueIdentityResult with the maximal pairwise discrepancy
    """
    point = complex(sigma)
    eta_residue = functions.laurent(SpectralFunction.ETA, Chart.A_MINUS_Z, point).residue(k)
    cut = cut_residue(functions, k, point) if abs(point) < 1e-12 else None
    values: Sequence[complex] = [v for v in (eta_residue, cut, wres_value) if v is not None]
    discrepancy = max((abs(x - y) for i, x in enumerate(values) for y in values[i + 1:]), default=0.0)
    if wres_value is None:
        logger.warning(f"No symbol bridge for {functions.operator.label()}; residue identity checked spectrally only")
    return ResidueIdentityResult(point=point, k=k, eta_residue=eta_residue, cut_residue=cut,
                                 wres_value=wres_value, discrepancy=discrepancy, bridged=wres_value is not None)
