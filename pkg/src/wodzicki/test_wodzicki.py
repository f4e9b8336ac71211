"""
Unit tests for the WodzickiService.

HOW TO RUN:
From the src directory, run:
    python -m wodzicki.test_wodzicki
"""

import numpy as np

from spectra.domain import NoTorusSymbolError
from spectra.service import SpectraService
from symbolcore.builder import from_components, identity_symbol, one_factor, random_symbol, zero_symbol
from symbolcore.calculus import combine
from symbolcore.domain import BiOrder, DomainError
from symbolcore.legs import LegTensorSymbol, SmoothingLeg

from .domain import CheckResult, OrderError, PreconditionError, Route, VerificationReport
from .service import WodzickiService

spectra = SpectraService()


def power_tensor(a, b, p=-1.0, parity=0):
    return spectra.tensor({"kind": "circle_power", "params": {"a": a, "p": p, "parity": parity}},
                          {"kind": "circle_power", "params": {"a": b, "p": p, "parity": parity}})


def generator(a):
    return spectra.make_model("abs_circle_dirac", {"a": a})


def unit_leg(index=9, window=16):
    vector = np.zeros(window)
    vector[index] = 1.0
    return SmoothingLeg.rank_one(vector)


def test_wres2_quadrature():
    """Test the cosphere quadrature on constant, odd and low-order symbols."""
    print("Testing Wres² quadrature...")

    service = WodzickiService()
    inverse = spectra.exact_symbol(power_tensor(0.5, 0.25))
    result = service.wres2_quadrature(inverse)
    assert result.route == Route.QUADRATURE and abs(result.value - 4) < 1e-12, f"Expected 4, got {result.value}"

    odd = spectra.exact_symbol(power_tensor(0.5, 0.5, parity=1))
    assert abs(service.wres2_quadrature(odd).value) < 1e-14, "Odd symbols have zero residue"

    low = spectra.exact_symbol(power_tensor(0.5, 0.5, p=-2.0))
    assert service.wres2_quadrature(low).value == 0, "Order (−2, −2) has no (−1, −1) component"

    shallow = from_components(BiOrder(1, 1), {(0, 0): 1.0}, depth=(1, 1))
    try:
        service.wres2_quadrature(shallow)
        assert False, "Missing (−1, −1) component should raise OrderError"
    except OrderError:
        pass

    rng = np.random.default_rng(3)
    a = random_symbol(rng, BiOrder(0, 0), depth=(2, 2))
    b = random_symbol(rng, BiOrder(0, 0), depth=(2, 2))
    combined = service.wres2_quadrature(combine(a, b, 2.0, -3.0j)).value
    expected = 2.0 * service.wres2_quadrature(a).value - 3.0j * service.wres2_quadrature(b).value
    assert abs(combined - expected) < 1e-10, "Wres² should be linear"

    print("✓ Wres² quadrature working correctly")


def test_wres_spectral():
    """Test the spectral route, route agreement and Q-independence."""
    print("Testing spectral Wres...")

    service = WodzickiService()
    half = generator(0.5)
    inverse = power_tensor(0.5, 0.5)
    result = service.wres_spectral(inverse, half, half, k=2)
    assert result.route == Route.SPECTRAL and abs(result.value - 4) < 1e-8, f"Expected 4, got {result.value}"
    assert "abs_circle_dirac" in result.generators

    assert abs(service.wres_spectral(None, half, half, k=2).value) < 1e-8, "Identity has zero Wres²"

    odd = power_tensor(0.25, 0.25, parity=1)
    for q in (generator(0.25), half):
        for k in (1, 2):
            assert abs(service.wres_spectral(odd, q, q, k=k).value) < 1e-8, f"Odd symbol, k = {k}, should vanish"

    third = generator(1.0 / 3.0)
    for operator in (inverse, power_tensor(0.5, 0.5, parity=1), power_tensor(0.5, 0.5, p=-2.0)):
        quadrature = service.wres2_quadrature(spectra.exact_symbol(operator)).value
        first = service.wres_spectral(operator, half, half).value
        second = service.wres_spectral(operator, third, third).value
        assert abs(first - quadrature) < 1e-6, f"Routes disagree on {operator.label()}"
        assert abs(first - second) < 1e-6, f"Wres² of {operator.label()} depends on Q"

    print("✓ Spectral Wres working correctly")


def test_restricted_traces():
    """Test Tr₁ and Tr₂ on leg tensors and classical symbols."""
    print("Testing restricted traces...")

    service = WodzickiService()
    inverse_leg = LegTensorSymbol(factor=one_factor(-1.0, [1.0, 0.0, 0.0], 16), leg=unit_leg())
    assert abs(service.restricted_trace(inverse_leg, factor=1) - 2) < 1e-14, "Tr₁ should be (2π)^{−1}·4π·1 = 2"

    odd_leg = LegTensorSymbol(factor=one_factor(-1.0, [lambda t, w: w, 0.0, 0.0], 16), leg=unit_leg())
    assert abs(service.restricted_trace(odd_leg, factor=1)) < 1e-14, "Odd ω₁ dependence gives 0"

    swapped = LegTensorSymbol(factor=one_factor(-1.0, [1.0, 0.0, 0.0], 16), leg=unit_leg(), slot=1)
    assert abs(service.restricted_trace(swapped, factor=2) - 2) < 1e-14, "Tr₂ mirrors Tr₁"
    try:
        service.restricted_trace(swapped, factor=1)
        assert False, "Order −1 classical factor is not trace-class"
    except DomainError:
        pass

    rng = np.random.default_rng(5)
    a = random_symbol(rng, BiOrder(-1, -3), depth=(2, 2))
    b = random_symbol(rng, BiOrder(-1, -3), depth=(2, 2))
    combined = service.restricted_trace(combine(a, b, 0.5, 2.0), factor=1)
    expected = 0.5 * service.restricted_trace(a, factor=1) + 2.0 * service.restricted_trace(b, factor=1)
    assert abs(combined - expected) < 1e-10 * max(1.0, abs(expected)), "Tr₁ should be linear"

    try:
        service.restricted_trace(random_symbol(rng, BiOrder(-1, 0), depth=(2, 2)), factor=1)
        assert False, "Second factor of order 0 is not trace-class"
    except DomainError:
        pass

    print("✓ Restricted traces working correctly")


def test_commutator_residue():
    """Test the trace property of Wres²."""
    print("Testing commutator residues...")

    service = WodzickiService()
    first = spectra.exact_symbol(spectra.tensor({"kind": "abs_circle_dirac", "params": {"a": 0.5}},
                                                {"kind": "abs_circle_dirac", "params": {"a": 0.25}}))
    second = spectra.exact_symbol(spectra.tensor({"kind": "circle_dirac", "params": {"a": 0.25}},
                                                 {"kind": "circle_dirac", "params": {"a": 0.25}}))
    assert abs(service.commutator_residue(first, second).value) < 1e-14, "Multipliers commute"

    a = from_components(BiOrder(1, 1), {(0, 0): lambda t1, w1, t2, w2: np.cos(t1)})
    b = from_components(BiOrder(1, 0), {(0, 0): lambda t1, w1, t2, w2: np.sin(t2)})
    assert abs(service.commutator_residue(a, b).value) < 1e-6, "Fixed pair should have vanishing residue"

    rng = np.random.default_rng(2024)
    for _ in range(20):
        a = random_symbol(rng, BiOrder(0, 0), depth=(3, 3))
        b = random_symbol(rng, BiOrder(0, 0), depth=(3, 3))
        value = service.commutator_residue(a, b).value
        assert abs(value) < 1e-6, f"Commutator residue {value} too large"

    print("✓ Commutator residues working correctly")


def test_projection_residue():
    """Test Wres² of idempotents and the precondition."""
    print("Testing projection residues...")

    service = WodzickiService()
    modes = spectra.make_model("explicit", {"values": [1.0] * 6})
    assert service.projection_residue(modes).value == 0
    assert service.projection_residue(spectra.make_model("finite_rank_projection", {"rank": 3})).value == 0

    positive_part = one_factor(0.0, [lambda t, w: (1 + w) / 2, 0.0, 0.0], 16,
                               evaluate=lambda theta, l: (1.0 + np.sign(np.asarray(l) + 0.25)) / 2)
    leg_projection = LegTensorSymbol(factor=positive_part, leg=unit_leg())
    assert abs(service.projection_residue(leg_projection).value) < 1e-8

    assert service.projection_residue(zero_symbol(BiOrder(0, 0), depth=(2, 2))).value == 0
    assert service.projection_residue(identity_symbol(depth=(2, 2))).value == 0

    for bad in (spectra.make_model("explicit", {"values": [2.0]}),
                from_components(BiOrder(0, 0), {(0, 0): 2.0}, depth=(2, 2), multiplier=True)):
        try:
            service.projection_residue(bad)
            assert False, "Non-idempotent input should raise PreconditionError"
        except PreconditionError as e:
            assert abs(e.defect - 2.0) < 1e-12, f"Defect should be 2, got {e.defect}"

    print("✓ Projection residues working correctly")


def test_eta_residue_via_wres():
    """Test Res² η against m₁m₂·Wres²(F|A|^{−σ})."""
    print("Testing η residues via Wres...")

    service = WodzickiService()
    positive = spectra.tensor({"kind": "abs_circle_dirac", "params": {"a": 0.25}},
                              {"kind": "abs_circle_dirac", "params": {"a": 0.5}})
    comparison = service.eta_residue_via_wres(positive, 1.0)
    assert abs(comparison.lhs - 4) < 1e-8 and abs(comparison.rhs - 4) < 1e-12
    assert comparison.discrepancy < 1e-6 and "m1m2_wres_sign" in comparison.matching

    zero = service.eta_residue_via_wres(positive, 0.0)
    assert abs(zero.lhs) < 1e-8 and abs(zero.rhs) < 1e-12

    dirac = spectra.tensor({"kind": "circle_dirac", "params": {"a": 0.25}},
                           {"kind": "circle_dirac", "params": {"a": 0.25}})
    comparison = service.eta_residue_via_wres(dirac, 1.0)
    assert abs(comparison.lhs) < 1e-8 and abs(comparison.rhs) < 1e-12

    try:
        service.eta_residue_via_wres(spectra.make_model("harmonic_oscillator", {"n": 1}), 1.0)
        assert False, "Oscillators have no torus symbol"
    except NoTorusSymbolError:
        pass

    print("✓ η residues via Wres working correctly")


def test_verification_report():
    """Test the wire format of check results."""
    print("Testing verification reports...")

    passing = CheckResult.compare("wres2", 4.0, 4.0 + 1e-12, 1e-8)
    failing = CheckResult.compare("trace", 1.0, 0.0, 1e-8, {"grid": 16})
    report = VerificationReport(suite="wres", checks=[passing, failing])
    assert passing.passed and not failing.passed and not report.passed
    assert report.failures() == [failing]

    data = report.model_dump(by_alias=True)
    assert data["checks"][0]["pass"] is True and data["checks"][0]["lhs"] == [4.0, 0.0]
    assert data["checks"][1]["certificates"]["grid"] == 16
    restored = VerificationReport.model_validate(data)
    assert restored.checks[1].certificates["discrepancy"] == 1.0

    print("✓ Verification reports working correctly")


def run_all_tests():
    """Run all test functions."""
    print("=" * 50)
    print("Running Wodzicki Tests")
    print("=" * 50)

    test_functions = [
        test_wres2_quadrature,
        test_wres_spectral,
        test_restricted_traces,
        test_commutator_residue,
        test_projection_residue,
        test_eta_residue_via_wres,
        test_verification_report,
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
