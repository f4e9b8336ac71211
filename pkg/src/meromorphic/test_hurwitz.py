"""
Unit tests for the Hurwitz zeta engine.

Oracle values come from mpmath.zeta, mpmath.digamma and mpmath.stieltjes.

HOW TO RUN:
From the src directory, run:
    python -m meromorphic.test_hurwitz
"""

import math

import mpmath

from .domain import PoleError
from .hurwitz import hurwitz_zeta, shifted_hurwitz


def test_against_mpmath():
    """Test Euler–Maclaurin values against mpmath on |s| ≤ 20."""
    print("Testing Hurwitz values against mpmath...")

    arguments = [2.0, 0.5, -3.5, 3 + 4j, -10 + 2j, 15.0, -19.5, 0.3 + 10j, 20j, 1.5 - 7j]
    for s in arguments:
        for a in (0.25, 0.5, 0.75, 1.0):
            value = hurwitz_zeta(s, a)
            expected = complex(mpmath.zeta(s, a))
            error = abs(value - expected)
            assert error < 1e-12 * max(1.0, abs(expected)), f"ζ_H({s}, {a}) off by {error}"

    print("✓ Hurwitz values against mpmath working correctly")


def test_special_values():
    """Test ζ_H(2, 1) = π²/6 and ζ_H(0, a) = 1/2 − a."""
    print("Testing Hurwitz special values...")

    assert abs(hurwitz_zeta(2, 1.0) - math.pi ** 2 / 6) < 1e-13, "ζ_H(2, 1) should be π²/6"
    for a in (0.25, 0.5, 0.9):
        assert abs(hurwitz_zeta(0, a) - (0.5 - a)) < 1e-13, f"ζ_H(0, {a}) should be {0.5 - a}"
    assert abs(hurwitz_zeta(-1, 0.5) - 1.0 / 24) < 1e-13, "ζ_H(−1, 1/2) should be 1/24"

    try:
        hurwitz_zeta(2, 0.0)
        assert False, "Shift 0 should raise ValueError"
    except ValueError:
        pass

    print("✓ Hurwitz special values working correctly")


def test_pole_at_one():
    """Test the pole error and the behaviour next to s = 1."""
    print("Testing the pole at s = 1...")

    for a in (0.25, 0.5, 1.0):
        try:
            hurwitz_zeta(1, a)
            assert False, "s = 1 should raise PoleError"
        except PoleError as e:
            assert e.laurent is not None, "PoleError should carry a Laurent expansion"
            assert abs(e.laurent.residue(1) - 1.0) < 1e-15
            assert abs(e.laurent.coefficient(0) + complex(mpmath.digamma(a))) < 1e-13

        eps = 1e-4
        scaled = eps * hurwitz_zeta(1 + eps, a)
        gamma0, gamma1 = float(mpmath.stieltjes(0, a)), float(mpmath.stieltjes(1, a))
        expected = 1 + gamma0 * eps - gamma1 * eps ** 2
        assert abs(scaled - expected) < 1e-10, f"(s−1)ζ_H(s, {a}) off by {abs(scaled - expected)}"
        assert abs(scaled - 1) < 1e-3, "(s−1)ζ_H(s, a) should tend to 1"

    print("✓ Pole at s = 1 working correctly")


def test_shifted_hurwitz():
    """Test the shifted series against direct sums and exact recombinations."""
    print("Testing shifted Hurwitz series...")

    u, delta = 1.0 / 3.0, 1.0 / 6.0
    value = shifted_hurwitz(4.0, u, delta, -1.0)
    expected = mpmath.nsum(lambda n: (n + u + delta) ** -1 * (n + u) ** -4, [0, mpmath.inf])
    assert abs(value - complex(expected)) < 1e-12, f"Convergent shifted sum off by {abs(value - complex(expected))}"

    # (n + u + δ)(n + u)^{−z} = (n + u)^{1−z} + δ(n + u)^{−z} holds after continuation
    for z in (-0.5 + 1j, 0.25, 3.0 - 2j):
        value = shifted_hurwitz(z, u, delta, 1.0)
        expected = complex(mpmath.zeta(z - 1, u) + delta * mpmath.zeta(z, u))
        assert abs(value - expected) < 1e-11 * max(1.0, abs(expected)), f"Continued shifted sum off at z = {z}"

    assert abs(shifted_hurwitz(2.5, 0.5, 0.0, -1.0) - hurwitz_zeta(3.5, 0.5)) < 1e-15, \
        "Zero shift should reduce to a single Hurwitz value"

    print("✓ Shifted Hurwitz series working correctly")


def run_all_tests():
    """Run all test functions."""
    print("=" * 50)
    print("Running Hurwitz Tests")
    print("=" * 50)

    test_functions = [
        test_against_mpmath,
        test_special_values,
        test_pole_at_one,
        test_shifted_hurwitz,
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
