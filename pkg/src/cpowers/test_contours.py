"""
Unit tests for contour integrals of λ^z.

HOW TO RUN:
From the src directory, run:
    python -m cpowers.test_contours
"""

import math

import numpy as np

from symbolcore.domain import Sector

from .contours import (
    branch_power, cauchy_kernel, closed_cauchy_kernel, power_reduction,
)
from .domain import AssumptionError, Contour, GeometryError
from .service import PowerService


def test_scalar_powers():
    """Test the keyhole and circle integrals on known powers."""
    print("Testing scalar contour powers...")

    service = PowerService()
    value = service.contour_power_scalar(3.0, -0.5)
    assert abs(value - 3.0 ** -0.5) < 1e-10, f"Expected 3^(−1/2), got {value}"
    assert abs(value - 0.5773503) < 1e-7

    for z in (-0.3, -1.0 + 0.5j, -2.7):
        assert abs(service.contour_power_scalar(1.0, z) - 1.0) < 1e-10, f"1^{z} should be 1"

    square = service.contour_integral(2.0, 2.0, Contour.circle(2.0, 1.0))
    assert abs(square.value - 4.0) < 1e-10 and square.error < 1e-10, f"Expected 4, got {square.value}"
    assert abs(square.margin - 1.0) < 1e-12, "Margin is the smaller of the distances to circle and cut"

    reduced = service.contour_integral(2.0, 1.5)
    assert reduced.reduction == 2 and abs(reduced.value - 2.0 ** 1.5) < 1e-10
    assert reduced.margin > 0

    print("✓ Scalar contour powers working correctly")


def test_cauchy_identity_samples():
    """Test p^z on random samples for circles and keyholes."""
    print("Testing Cauchy identity on random samples...")

    rng = np.random.default_rng(42)
    service = PowerService()

    def sample():
        p = rng.uniform(0.5, 10.0) * np.exp(1j * rng.uniform(-1.2, 1.2))
        z = rng.uniform(-3.0, 0.0) + 1j * rng.uniform(-1.0, 1.0)
        return complex(p), complex(z)

    for _ in range(200):
        p, z = sample()
        value = service.contour_power_scalar(p, z, Contour.circle(p, 0.5 * abs(p)))
        assert abs(value - p ** z) < 1e-9, f"Circle integral for {p}^{z}: {value} vs {p ** z}"

    for _ in range(30):
        p, z = sample()
        value = service.contour_power_scalar(p, z)
        assert abs(value - p ** z) < 1e-9, f"Keyhole integral for {p}^{z}: {value} vs {p ** z}"

    print("✓ Cauchy identity working correctly")


def test_geometry_errors():
    """Test contours that miss or meet the point or the branch cut."""
    print("Testing contour geometry errors...")

    service = PowerService()
    cases = [
        (-1.0, None),                          # inside the left half-plane sector
        (1j, None),                            # on the boundary ray
        (0.0, None),                           # branch point
        (3.0, Contour.circle(2.0, 0.5)),       # outside the circle
        (1.0, Contour.circle(1.0, 2.0)),       # circle crosses the negative real axis
    ]
    for p, contour in cases:
        try:
            service.contour_power_scalar(p, -0.5, contour)
            assert False, f"p = {p} should raise GeometryError"
        except GeometryError:
            pass

    try:
        service.contour_power_scalar(2.0, 2.5)
        assert False, "Re z ≥ 2 needs k > 2"
    except AssumptionError:
        pass

    try:
        Contour.circle(1.0, 0.5, nodes=32)
        assert False, "Fewer than 64 nodes should be rejected"
    except ValueError:
        pass

    print("✓ Contour geometry errors working correctly")


def test_power_reduction():
    """Test the choice of k in p^z = p^{z−k}·p^k."""
    print("Testing power reduction...")

    assert power_reduction(-1.5, decay=1.0) == 0
    assert power_reduction(-0.5, decay=1.0) == 1
    assert power_reduction(0.3, decay=1.0) == 2
    assert power_reduction(1.5, decay=1.0) == 2
    assert power_reduction(-0.5) == 0 and power_reduction(0.0) == 1 and power_reduction(1.2) == 2

    print("✓ Power reduction working correctly")


def test_branches_and_kernels():
    """Test branch placement and the Cauchy kernels against their closed forms."""
    print("Testing branches and Cauchy kernels...")

    rng = np.random.default_rng(7)
    values = rng.uniform(0.2, 5.0, 64) * np.exp(1j * rng.uniform(-2.5, 2.5, 64))
    z = -0.7 + 0.3j
    assert np.max(np.abs(branch_power(values, z) - np.power(values, z))) < 1e-13, \
        "Axis π should give the principal branch"
    assert abs(branch_power(-1.0, 0.5, math.pi / 2) + 1j) < 1e-15, \
        "Cut along the positive imaginary axis puts arg(−1) at −π"

    for power in range(1, 7):
        numeric = cauchy_kernel(values, z, power)
        closed = closed_cauchy_kernel(values, z, power)
        relative = np.max(np.abs(numeric - closed) / np.maximum(1.0, np.abs(closed)))
        assert relative < 1e-12, f"Kernel ℓ = {power} deviates by {relative}"
    assert np.max(np.abs(cauchy_kernel(values, z, 1) - np.power(values, z))) < 1e-12, \
        "ℓ = 1 kernel is p^z"

    sector = Sector.upper_half_plane()
    rotated = cauchy_kernel(np.array([2.0, -3.0 - 0.5j]), 0.5, 1, sector.axis_angle)
    assert abs(rotated[0] - math.sqrt(2.0)) < 1e-12
    assert abs(rotated[1] - complex(branch_power(-3.0 - 0.5j, 0.5, sector.axis_angle))) < 1e-12

    print("✓ Branches and Cauchy kernels working correctly")


def run_all_tests():
    """Run all test functions."""
    print("=" * 50)
    print("Running Contour Tests")
    print("=" * 50)

    test_functions = [
        test_scalar_powers,
        test_cauchy_identity_samples,
        test_geometry_errors,
        test_power_reduction,
        test_branches_and_kernels,
    ]

    passed = 0
    failed = 0

    for test_func in test_functions:
        try:
            test_func()
            passed += 1
        except Exception as e:
            print(f"✗ {test_func.__name__} FAILED: {e}")
            failed += 1

    print("=" * 50)
    print(f"Test Results: {passed} passed, {failed} failed")
    print("=" * 50)

    return failed == 0


def main():
    """Main function to run the tests."""
    success = run_all_tests()
    if success:
        print("All tests passed!")
        return 0
    else:
        print("Some tests failed!")
        return 1


if __name__ == "__main__":
    exit(main())
