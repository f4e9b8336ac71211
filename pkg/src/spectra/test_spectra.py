"""
Unit tests for model operators and their spectra.

This test file follows the project's testing guidelines:
- No testing library dependencies (plain asserts, runnable as a module)
- Brute-force oracles for enumerations

HOW TO RUN:
From the src directory, run:
    python -m spectra.test_spectra
"""

import csv
import os
import tempfile

import numpy as np

from .domain import KernelError, ModelError, NoTorusSymbolError, NonInvertibleModelError, EnumerationError
from .service import SpectraService


def test_make_model():
    """Test model construction and first eigenvalues."""
    print("Testing model construction...")

    service = SpectraService()
    dirac = service.make_model("circle_dirac", {"a": 0.25})
    values = [d.value for d in service.eigenvalues(dirac, 5)]
    assert values == [0.25, -0.75, 1.25, -1.75, 2.25], f"Unexpected circle_dirac(1/4) spectrum {values}"

    oscillator = service.make_model("harmonic_oscillator", {"n": 1})
    assert [d.value for d in service.eigenvalues(oscillator, 3)] == [1.0, 3.0, 5.0]

    square = service.tensor({"kind": "abs_circle_dirac", "params": {"a": 0.5}},
                            {"kind": "abs_circle_dirac", "params": {"a": 0.5}})
    first = service.eigenvalues(square, 1)[0]
    assert first.value == 0.25 and first.multiplicity == 4, f"Expected 1/4 with multiplicity 4, got {first}"

    try:
        service.make_model("circle_dirac", {"a": 1.0})
        assert False, "Integer shift should raise NonInvertibleModelError"
    except NonInvertibleModelError:
        pass

    try:
        service.make_model("dirac_on_sphere", {})
        assert False, "Unknown kind should raise ModelError"
    except ModelError:
        pass

    print("✓ Model construction working correctly")


def test_enumeration():
    """Test ordering, restartability and multiplicities."""
    print("Testing spectrum enumeration...")

    service = SpectraService()
    half = service.make_model("circle_dirac", {"a": 0.5})
    data = service.eigenvalues(half, 4)
    assert [d.value for d in data] == [-0.5, 0.5, -1.5, 1.5], f"Unexpected order {data}"
    assert data == service.eigenvalues(half, 4), "Re-enumeration should be identical"

    oscillator = service.make_model("harmonic_oscillator", {"n": 1})
    assert sum(d.multiplicity for d in service.eigenvalues(oscillator, 100)) == 100

    plane = service.make_model("harmonic_oscillator", {"n": 2})
    assert [(d.value, d.multiplicity) for d in service.eigenvalues(plane, 3)] == [(2.0, 1), (4.0, 2), (6.0, 3)]

    negative = service.negate(service.make_model("abs_circle_dirac", {"a": 0.25}))
    assert [d.value for d in service.eigenvalues(negative, 2)] == [-0.25, -0.75]

    try:
        service.eigenvalues(service.make_model("circle_power", {"a": 0.5, "p": -1.0}), 3)
        assert False, "Negative powers should raise EnumerationError"
    except EnumerationError:
        pass

    print("✓ Spectrum enumeration working correctly")


def test_tensor_enumeration_against_brute_force():
    """Test tensor enumeration against a sorted 200×200 product table."""
    print("Testing tensor enumeration against brute force...")

    service = SpectraService()
    a, b = 0.25, 1.0 / 3.0
    operator = service.tensor({"kind": "circle_dirac", "params": {"a": a}},
                              {"kind": "circle_dirac", "params": {"a": b}})
    lattice = np.arange(-100, 100)
    products = np.outer(lattice + a, lattice + b).ravel()
    T = 24.0
    merged = []
    for value in sorted(v for v in products if abs(v) <= T * (1 + 1e-12)):
        if merged and abs(merged[-1][0] - value) <= 1e-12 * abs(value):
            merged[-1][1] += 1
        else:
            merged.append([value, 1])
    # products are multiples of 1/12, so rounding |value| only removes rounding noise
    expected = sorted(merged, key=lambda item: (round(abs(item[0]), 9), item[0]))

    enumerated = []
    for datum in service.eigenvalues(operator, len(expected) + 5):
        if abs(datum.value) > T * (1 + 1e-12):
            break
        enumerated.append(datum)
    values = [d.value for d in enumerated]
    assert len(set(np.round(values, 9))) == len(values), "Equal eigenvalues should be merged into one datum"
    assert len(enumerated) == len(expected), f"Expected {len(expected)} data, got {len(enumerated)}"
    for datum, (value, multiplicity) in zip(enumerated, expected):
        assert abs(datum.value - value) <= 1e-12 * abs(value) and datum.multiplicity == multiplicity, \
            f"Mismatch: {datum} vs ({value}, {multiplicity})"
        assert datum.sign == np.sign(value)

    print("✓ Tensor enumeration against brute force working correctly")


def test_sign_decomposition():
    """Test sign filters, idempotency and kernel detection."""
    print("Testing sign decomposition...")

    service = SpectraService()
    half = service.make_model("circle_dirac", {"a": 0.5})
    plus, minus = service.sign_decomposition(half)
    data = service.eigenvalues(half, 20)
    assert len(plus.apply(data)) == 10 and len(minus.apply(data)) == 10, "Symmetric spectrum splits evenly"
    assert plus.compose(plus) == plus and minus.compose(minus) == minus, "Filters should be idempotent"
    assert plus.compose(minus).apply(data) == [], "Complementary filters should annihilate each other"
    assert plus.plus(minus).apply(data) == data, "Π₊ + Π₋ should pass the whole spectrum"

    positive = service.make_model("abs_circle_dirac", {"a": 0.25})
    plus, minus = service.sign_decomposition(positive)
    assert minus.apply(service.eigenvalues(positive, 50)) == [], "Positive operators have empty Π₋"

    product = service.tensor({"kind": "circle_dirac", "params": {"a": 0.25}},
                             {"kind": "circle_dirac", "params": {"a": 0.25}})
    plus, _ = service.sign_decomposition(product)
    for datum in service.eigenvalues(product, 200):
        assert plus.passes(datum) == (datum.value > 0)

    for kind, params in (("abs_circle_dirac", {"a": 0.0}), ("finite_rank_projection", {"rank": 3})):
        try:
            service.sign_decomposition(service.make_model(kind, params))
            assert False, f"{kind} should raise KernelError"
        except KernelError:
            pass

    print("✓ Sign decomposition working correctly")


def test_weyl_counting():
    """Test #{|λ| ≤ T} = 2T + O(1) for |D_a|."""
    print("Testing Weyl counting...")

    service = SpectraService()
    operator = service.make_model("abs_circle_dirac", {"a": 0.3})
    for T in (10.0, 100.0, 10000.0):
        count = service.counting_function(operator, T)
        assert abs(count - 2 * T) <= 2, f"Counting function {count} too far from 2T at T = {T}"

    print("✓ Weyl counting working correctly")


def test_exact_symbols():
    """Test the bridge from circle models to classical symbols."""
    print("Testing exact symbols...")

    service = SpectraService()
    absolute = service.exact_symbol(service.make_model("abs_circle_dirac", {"a": 0.25}))
    assert np.max(np.abs(absolute.table[0, 0] - 1.0)) < 1e-15, "Leading component of |D_a| should be 1"
    omega = np.array([1.0, -1.0]).reshape(1, 2, 1, 1)
    assert np.max(np.abs(absolute.table[1, 0] - 0.25 * omega)) < 1e-15, "Degree-0 component should be a·ω"
    assert absolute.order.m2 == 0.0

    product = service.exact_symbol(service.tensor({"kind": "abs_circle_dirac", "params": {"a": 0.5}},
                                                  {"kind": "abs_circle_dirac", "params": {"a": 0.25}}))
    assert np.max(np.abs(product.joint - 1.0)) < 1e-15, "Joint symbol of |D_a|⊗|D_b| should be 1"
    assert product.multiplier and product.exact is not None

    dirac = service.exact_factor(service.make_model("circle_dirac", {"a": 0.25}))
    assert np.max(np.abs(dirac.components[0] - np.array([1.0, -1.0]))) < 1e-15, "Leading component should be ω"
    assert np.max(np.abs(dirac.components[1] - 0.25)) < 1e-15, "Subleading component should be a"
    frequencies = np.arange(-5, 5)
    assert np.max(np.abs(dirac.evaluate(None, frequencies) - (frequencies + 0.25))) < 1e-15

    inverse = service.exact_factor(service.make_model("circle_power", {"a": 0.25, "p": -1.0}))
    signs = np.array([1.0, -1.0])
    for j in range(5):
        expected = (-0.25 * signs) ** j
        assert np.all(np.isfinite(inverse.components[j])), f"Component {j} of |D_1/4|^-1 is not finite"
        assert np.max(np.abs(inverse.components[j] - expected)) < 1e-15, \
            f"Component {j} of |D_1/4|^-1 should be (−a·ω)^j"
    for k in (20.0, -20.0):
        omega = 0 if k > 0 else 1
        series = sum(inverse.components[j][0, omega] * abs(k) ** (-1 - j) for j in range(5))
        assert abs(series - 1.0 / abs(k + 0.25)) < 1e-9, f"Expansion of |k + 1/4|^-1 is off at k = {k}"
    inverse_symbol = service.exact_symbol(service.tensor({"kind": "circle_power", "params": {"a": 0.25, "p": -1.0}},
                                                         {"kind": "circle_power", "params": {"a": 0.5, "p": -2.0}}))
    assert np.all(np.isfinite(inverse_symbol.table)), "Symbols of negative integer powers should be finite"

    for kind, params in (("harmonic_oscillator", {"n": 1}), ("finite_rank_projection", {"rank": 2})):
        try:
            service.exact_symbol(service.make_model(kind, params))
            assert False, f"{kind} should raise NoTorusSymbolError"
        except NoTorusSymbolError:
            pass

    print("✓ Exact symbols working correctly")


def test_descriptor_and_dump_files():
    """Test descriptor JSON and spectrum CSV files."""
    print("Testing descriptor and spectrum files...")

    service = SpectraService()
    operator = service.tensor({"kind": "circle_dirac", "params": {"a": 0.25}},
                              {"kind": "abs_circle_dirac", "params": {"a": 0.5}})
    with tempfile.TemporaryDirectory() as temp_dir:
        path = os.path.join(temp_dir, "model.json")
        service.save_model(operator, path)
        loaded = service.load_model(path)
        assert service.eigenvalues(loaded, 10) == service.eigenvalues(operator, 10)

        dump = os.path.join(temp_dir, "spectrum.csv")
        assert service.dump_spectrum(operator, 6, dump) == 6
        with open(dump, 'r', encoding='utf-8', newline='') as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["value", "multiplicity", "sign"] and len(rows) == 7
        assert service.store.read_spectrum(dump) == service.eigenvalues(operator, 6)

    print("✓ Descriptor and spectrum files working correctly")


def run_all_tests():
    """Run all test functions."""
    print("=" * 50)
    print("Running Spectra Tests")
    print("=" * 50)

    test_functions = [
        test_make_model,
        test_enumeration,
        test_tensor_enumeration_against_brute_force,
        test_sign_decomposition,
        test_weyl_counting,
        test_exact_symbols,
        test_descriptor_and_dump_files,
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
