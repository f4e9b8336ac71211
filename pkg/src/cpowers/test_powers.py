"""
Unit tests for complex powers, sign operators and the holomorphic functional calculus.

HOW TO RUN:
From the src directory, run:
    python -m cpowers.test_powers
"""

import numpy as np

from spectra.service import SpectraService
from symbolcore.builder import from_components, from_table, random_elliptic_symbol
from symbolcore.calculus import compose
from symbolcore.domain import BiOrder, Sector, mesh

from .domain import AssumptionError, Contour, GeometryError
from .service import PowerService


def abs_tensor(spectra, a, b):
    return spectra.tensor({"kind": "abs_circle_dirac", "params": {"a": a}},
                          {"kind": "abs_circle_dirac", "params": {"a": b}})


def test_resolvent_bound():
    """Test the sampled resolvent constant on positive and degenerate symbols."""
    print("Testing resolvent bound...")

    spectra, service = SpectraService(), PowerService()
    positive = spectra.exact_symbol(abs_tensor(spectra, 0.25, 0.5))
    constant, passed = service.resolvent_bound_check(positive, Sector.left_half_plane())
    assert passed and constant <= 2.0, f"Positive symbol should pass with C ≤ 2, got {constant}"

    doubled = from_table(positive.order, 2.0 * positive.table, multiplier=True)
    scaled, passed = service.resolvent_bound_check(doubled, Sector.left_half_plane())
    assert passed and constant / 2 <= scaled <= 2 * constant, f"Scaling moved C from {constant} to {scaled}"

    degenerate = from_components(BiOrder(1.0, 1.0), {(0, 0): lambda t1, w1, t2, w2: np.cos(t1) + 0 * t2})
    _, passed = service.resolvent_bound_check(degenerate, Sector.left_half_plane())
    assert not passed, "A vanishing leading symbol should fail the resolvent bound"

    print("✓ Resolvent bound working correctly")


def test_multiplier_powers():
    """Test A^z for Fourier multipliers against exact symbols."""
    print("Testing complex powers of multipliers...")

    spectra, service = SpectraService(), PowerService()
    base = abs_tensor(spectra, 0.25, 0.25)
    a = spectra.exact_symbol(base)

    inverse = service.complex_power(a, -1)
    expected = spectra.exact_symbol(spectra.tensor(
        {"kind": "circle_power", "params": {"a": 0.25, "p": -1.0}},
        {"kind": "circle_power", "params": {"a": 0.25, "p": -1.0}}))
    assert np.max(np.abs(inverse.symbol.table - expected.table)) < 1e-10, \
        "A^(−1) should match the symbol of |D_a|^(−1)⊗|D_b|^(−1)"
    assert inverse.symbol.order.matches(BiOrder(-1.0, -1.0)) and inverse.reduction == 0
    assert inverse.certificate < 1e-8, f"Kernel certificate too large: {inverse.certificate}"

    leading_only = from_components(BiOrder(1.0, 1.0), {(0, 0): 1.0}, multiplier=True)
    power = service.complex_power_symbol(leading_only, -1)
    assert np.max(np.abs(power.table[0, 0] - 1.0)) < 1e-12, "Leading component of |ξ₁|^(−1)|ξ₂|^(−1) is 1"
    assert np.max(np.abs(power.table[1:])) < 1e-12 and np.max(np.abs(power.table[:, 1:])) < 1e-12

    half = service.complex_power_symbol(a, -0.5)
    product = compose(half, half)
    assert np.max(np.abs(product.table - inverse.symbol.table)) < 1e-10, "A^(−1/2)∘A^(−1/2) should be A^(−1)"

    root = service.complex_power(a, 0.5)
    assert root.reduction == 1, f"Re z = 1/2 should reduce through k = 1, got {root.reduction}"
    square = compose(root.symbol, root.symbol)
    assert np.max(np.abs(square.table - a.table)) < 1e-10, "A^(1/2)∘A^(1/2) should be A"

    print("✓ Complex powers of multipliers working correctly")


def test_general_powers():
    """Test leading components and assumptions for θ-dependent symbols."""
    print("Testing complex powers of general symbols...")

    rng = np.random.default_rng(42)
    service = PowerService()
    a = random_elliptic_symbol(rng, BiOrder(1.0, 1.0), depth=(2, 2))
    z = -0.7
    power = service.complex_power(a, z)
    assert np.max(np.abs(power.symbol.table[0, 0] - a.table[0, 0] ** z)) < 1e-9, \
        "Leading component of A^z should be σ^z"
    assert power.symbol.order.matches(BiOrder(z, z))
    assert power.certificate < 1e-8

    half = service.complex_power_symbol(a, -0.35)
    leading = compose(half, half).table[0, 0]
    assert np.max(np.abs(leading - power.symbol.table[0, 0])) < 1e-9, "Leading components should multiply"

    degenerate = from_components(BiOrder(1.0, 1.0), {(0, 0): lambda t1, w1, t2, w2: np.cos(t1) + 0 * t2})
    try:
        service.complex_power(degenerate, -0.5)
        assert False, "A symbol that is not Λ-elliptic should raise AssumptionError"
    except AssumptionError as e:
        assert e.witness is not None

    try:
        service.complex_power(a, 2.5)
        assert False, "Re z ≥ 2 should raise AssumptionError"
    except AssumptionError:
        pass

    print("✓ Complex powers of general symbols working correctly")


def test_sign_operator():
    """Test F = A(A²)^(−1/2) on self-adjoint multipliers."""
    print("Testing sign operators...")

    spectra, service = SpectraService(), PowerService()
    dirac = spectra.exact_symbol(spectra.tensor({"kind": "circle_dirac", "params": {"a": 0.25}},
                                                {"kind": "circle_dirac", "params": {"a": 0.25}}))
    sign = service.sign_operator_symbol(dirac)
    _, omega1, _, omega2 = mesh(sign.grid)
    assert np.max(np.abs(sign.table[0, 0] - omega1 * omega2)) < 1e-10, "Leading sign symbol should be ω₁ω₂"
    lower = np.array(sign.table)
    lower[0, 0] = 0.0
    assert np.max(np.abs(lower)) < 1e-10, "Lower components of the sign symbol should vanish"
    assert service.sign_square_defect(sign) < 1e-8, "F² should be the identity"

    for l1 in (-3, -1, 1, 4):
        for l2 in (-2, 1, 5):
            expected = np.sign((l1 + 0.25) * (l2 + 0.25))
            value = sign.table[0, 0, 0, 0 if l1 > 0 else 1, 0, 0 if l2 > 0 else 1]
            assert abs(value - expected) < 1e-10, f"F should be sign(λ) at frequency ({l1}, {l2})"

    positive = spectra.exact_symbol(abs_tensor(spectra, 0.25, 0.5))
    identity = service.sign_operator_symbol(positive)
    target = np.zeros_like(identity.table)
    target[0, 0] = 1.0
    assert np.max(np.abs(identity.table - target)) < 1e-10, "Sign of a positive operator is the identity"

    skew = from_components(BiOrder(1.0, 1.0), {(0, 0): 1.0, (1, 0): 1j}, multiplier=True)
    try:
        service.sign_operator_symbol(skew)
        assert False, "A symbol that is not self-adjoint should raise AssumptionError"
    except AssumptionError as e:
        assert e.witness['condition'] == 'self_adjoint'

    print("✓ Sign operators working correctly")


def test_holomorphic_calculus():
    """Test f(A) on enumerated spectra against direct evaluation."""
    print("Testing holomorphic functional calculus...")

    spectra, service = SpectraService(), PowerService()
    operator = spectra.make_model("abs_circle_dirac", {"a": 0.5})

    image = service.holomorphic_calculus(lambda w: w, operator, count=20)
    original = spectra.eigenvalues(operator, 20)
    mapped = spectra.eigenvalues(image, 20)
    for before, after in zip(original, mapped):
        assert abs(before.value - after.value) < 1e-10 and before.multiplicity == after.multiplicity

    squared = service.holomorphic_calculus(lambda w: w ** 2, operator, count=20)
    for k, datum in enumerate(spectra.eigenvalues(squared, 20)):
        assert abs(datum.value - (k + 0.5) ** 2) < 1e-9, f"Expected {(k + 0.5) ** 2}, got {datum.value}"
        assert datum.multiplicity == 2

    scaled = spectra.make_model("abs_circle_dirac", {"a": 0.5, "scale": 0.01})
    largest = abs(spectra.eigenvalues(scaled, 100)[-1].value)
    result = service.holomorphic_image(np.exp, scaled, count=100, contour=Contour.circle(0.0, 2 * largest))
    assert result.error < 1e-10, f"exp(A) by one circle deviates by {result.error}"
    local = service.holomorphic_image(np.exp, operator, count=100)
    assert local.error < 1e-10, f"exp(A) by local circles deviates by {local.error}"

    for contour in (Contour.circle(0.0, 0.5 * largest), Contour.keyhole()):
        try:
            service.holomorphic_image(np.exp, scaled, count=100, contour=contour)
            assert False, f"{contour.kind.value} contour should raise GeometryError"
        except GeometryError:
            pass

    try:
        service.holomorphic_image(lambda w: 1j * w, operator, count=10)
        assert False, "Non-real images should raise ValueError"
    except ValueError:
        pass

    print("✓ Holomorphic functional calculus working correctly")


def run_all_tests():
    """Run all test functions."""
    print("=" * 50)
    print("Running Complex Power Tests")
    print("=" * 50)

    test_functions = [
        test_resolvent_bound,
        test_multiplier_powers,
        test_general_powers,
        test_sign_operator,
        test_holomorphic_calculus,
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
