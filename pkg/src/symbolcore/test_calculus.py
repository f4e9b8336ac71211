"""
Unit tests for the bisingular symbol calculus.

This test file follows the project's testing guidelines:
- No testing library dependencies (plain asserts, runnable as a module)
- Deterministic inputs (fixed seeds)

HOW TO RUN:
From the src directory, run:
    python -m symbolcore.test_calculus
"""

import dataclasses

import numpy as np

from .builder import from_components, identity_symbol, one_factor, random_symbol, tensor_symbol
from .calculus import adjoint, commutator, compatibility_check, compose, principal_symbols, sup_norm, combine
from .compactification import rc_inverse, rc_map
from .domain import BiOrder, DomainError, TruncationError
from .oracle import ModeLatticeOracle


def abs_dirac_factor(a, depth=4, grid=16):
    """|ξ + a| = |ξ| + a·ω for |ξ| ≥ 1."""
    return one_factor(1.0, [1.0, lambda t, w: a * w] + [0.0] * (depth - 1), grid)


def dirac_factor(a, depth=4, grid=16):
    """ξ + a = ω|ξ| + a."""
    return one_factor(1.0, [lambda t, w: w, a] + [0.0] * (depth - 1), grid)


def test_radial_compactification():
    """Test rc_map and rc_inverse."""
    print("Testing radial compactification...")

    z, z0 = rc_map(np.zeros(1))
    assert np.allclose(z, 0.0) and abs(z0 - 1.0) < 1e-15, "Origin should map to the pole"

    _, z0 = rc_map(np.array([1.0, 1.0, 1.0]))
    assert abs(z0 - 0.5) < 1e-15, f"|ξ| = √3 should give last coordinate 1/2, got {z0}"

    assert np.allclose(rc_inverse(1.0, np.zeros(2)), 0.0)
    result = rc_inverse(0.5, np.array([np.sqrt(3) / 2, 0.0]))
    assert abs(np.linalg.norm(result) - np.sqrt(3)) < 1e-12

    rng = np.random.default_rng(7)
    for _ in range(100):
        xi = rng.standard_normal(2) * 10
        z, z0 = rc_map(xi)
        assert abs(np.dot(z, z) + z0 ** 2 - 1.0) < 1e-12, "Image should lie on the unit sphere"
        assert np.max(np.abs(rc_inverse(z0, z) - xi)) < 1e-12, "rc_inverse should undo rc_map"

    try:
        rc_inverse(0.0, np.zeros(1))
        assert False, "z0 = 0 should raise DomainError"
    except DomainError:
        pass

    print("✓ Radial compactification working correctly")


def test_principal_symbols_and_compatibility():
    """Test principal symbols and the compatibility check."""
    print("Testing principal symbols and compatibility...")

    a = tensor_symbol(abs_dirac_factor(0.25), abs_dirac_factor(0.5))
    principal = principal_symbols(a)
    assert np.max(np.abs(principal.joint - 1.0)) < 1e-15, "σ^{1,1}(|D_a|⊗|D_b|) should be 1"
    assert principal.sigma1.shape[0] == a.depth[1] + 1, "σ₁ should be the row j = 0"

    signed = tensor_symbol(dirac_factor(0.0), dirac_factor(0.0))
    _, omega1, _, omega2 = np.meshgrid([0], [1.0, -1.0], [0], [1.0, -1.0], indexing='ij')
    assert np.max(np.abs(principal_symbols(signed).joint - omega1 * omega2)) < 1e-15, \
        "Joint symbol of sign(ξ₁)sign(ξ₂)|ξ₁||ξ₂| should be ω₁ω₂"

    result = compatibility_check(a)
    assert result.passed and result.max_error < 1e-12, "Constructed symbols should be compatible"

    corrupted_table = np.array(a.table)
    corrupted_table[0, 0] += 1.0
    corrupted = dataclasses.replace(a, table=corrupted_table)
    result = compatibility_check(corrupted)
    assert not result.passed, "Corrupted symbol should fail compatibility"
    assert abs(result.max_error - 1.0) < 1e-12, f"Discrepancy should be 1, got {result.max_error}"

    print("✓ Principal symbols and compatibility working correctly")


def test_composition_units_and_multipliers():
    """Test composition with the identity and of multipliers."""
    print("Testing composition with identity and multipliers...")

    rng = np.random.default_rng(11)
    a = random_symbol(rng, BiOrder(1.0, 0.5), depth=(3, 3))
    identity = identity_symbol((3, 3))
    assert sup_norm(combine(compose(a, identity), a, 1.0, -1.0)) < 1e-12, "a∘1 should equal a"
    assert sup_norm(combine(compose(identity, a), a, 1.0, -1.0)) < 1e-12, "1∘a should equal a"

    first = tensor_symbol(abs_dirac_factor(0.5), abs_dirac_factor(0.5))
    second = tensor_symbol(dirac_factor(0.25), dirac_factor(0.25))
    product = compose(first, second)
    expected = np.zeros_like(product.table)
    for j in range(5):
        for k in range(5):
            for j1 in range(j + 1):
                for k1 in range(k + 1):
                    expected[j, k] += first.table[j1, k1] * second.table[j - j1, k - k1]
    assert np.max(np.abs(product.table - expected)) < 1e-12, "Multipliers should multiply as expansions"
    assert product.exact is not None, "Product of exact multipliers keeps its exact factors"

    try:
        compose(a, identity, depth=(5, 5))
        assert False, "Depth beyond the components should raise TruncationError"
    except TruncationError:
        pass

    print("✓ Composition with identity and multipliers working correctly")


def test_leading_symbol_multiplicativity():
    """Test σ^{m1,m2}(a∘b) = σ^{m1,m2}(a)·σ^{m1,m2}(b) on random pairs."""
    print("Testing leading symbol multiplicativity...")

    rng = np.random.default_rng(3)
    for _ in range(10):
        a = random_symbol(rng, BiOrder(1.0, 2.0), depth=(2, 2))
        b = random_symbol(rng, BiOrder(-0.5, 1.0), depth=(2, 2))
        product = compose(a, b)
        error = float(np.max(np.abs(product.table[0, 0] - a.table[0, 0] * b.table[0, 0])))
        assert error < 1e-10, f"Leading symbol should multiply, error {error}"
        assert compatibility_check(product).passed, "Compositions should be compatible"

    print("✓ Leading symbol multiplicativity working correctly")


def test_associativity():
    """Test (a∘b)∘c = a∘(b∘c) up to truncation."""
    print("Testing associativity...")

    rng = np.random.default_rng(5)
    a = random_symbol(rng, BiOrder(1.0, 1.0), depth=(3, 3))
    b = random_symbol(rng, BiOrder(0.5, -1.0), depth=(3, 3))
    c = random_symbol(rng, BiOrder(-1.0, 0.0), depth=(3, 3))
    left = compose(compose(a, b), c)
    right = compose(a, compose(b, c))
    error = sup_norm(combine(left, right, 1.0, -1.0))
    assert error < 1e-8, f"Composition should be associative up to truncation, error {error}"

    print("✓ Associativity working correctly")


def test_adjoint():
    """Test adjoints of multipliers and the involution property."""
    print("Testing adjoint...")

    real = tensor_symbol(abs_dirac_factor(0.5), abs_dirac_factor(0.25))
    assert sup_norm(combine(adjoint(real), real, 1.0, -1.0)) < 1e-15, "Real multiplier should be self-adjoint"

    imaginary = from_components(BiOrder(1.0, 1.0), {(0, 0): 1j, (1, 0): 0.5j}, multiplier=True)
    error = sup_norm(combine(adjoint(imaginary), imaginary, 1.0, 1.0))
    assert error < 1e-15, "Adjoint of i·(multiplier) should be −i·(multiplier)"

    rng = np.random.default_rng(13)
    a = random_symbol(rng, BiOrder(1.0, 0.5), depth=(3, 3))
    once = adjoint(a)
    assert np.max(np.abs(once.table[0, 0] - np.conj(a.table[0, 0]))) < 1e-15, \
        "Leading component of the adjoint should be conjugated"
    twice = adjoint(once)
    error = sup_norm(combine(twice, a, 1.0, -1.0))
    assert error < 1e-10, f"Adjoint should be an involution, error {error}"

    print("✓ Adjoint working correctly")


def test_composition_against_oracle():
    """Test truncated composition against exact composition on the mode lattice."""
    print("Testing composition against the mode-lattice oracle...")

    oracle = ModeLatticeOracle()
    a = from_components(BiOrder(1.0, 1.0), {(0, 0): lambda t1, w1, t2, w2: np.cos(t1) + 0 * t2}, depth=(4, 4))
    b = from_components(BiOrder(1.0, 0.0), {(0, 0): lambda t1, w1, t2, w2: np.sin(t2) + 0 * t1}, depth=(4, 4))
    bracket = commutator(a, b)
    for l1, l2 in ((32, 32), (40, -36)):
        exact = oracle.compose_column(a, b, l1, l2) - oracle.compose_column(b, a, l1, l2)
        truncated = oracle.full_symbol(bracket, l1, l2)
        error = float(np.max(np.abs(exact - truncated)))
        assert error < 1e-6, f"Commutator should match the oracle at {(l1, l2)}, error {error}"
    assert np.max(np.abs(bracket.table[3, 2])) < 1e-15, "Commutator has no (−1, −1) component"

    rng = np.random.default_rng(17)
    a = random_symbol(rng, BiOrder(1.0, 1.0), depth=(6, 6), modes=1)
    b = random_symbol(rng, BiOrder(0.0, 1.0), depth=(6, 6), modes=1)
    product = compose(a, b)
    for l1, l2 in ((48, 40), (-44, 52)):
        exact = oracle.compose_column(a, b, l1, l2)
        truncated = oracle.full_symbol(product, l1, l2)
        relative = float(np.max(np.abs(exact - truncated))) / float(np.max(np.abs(exact)))
        assert relative < 1e-6, f"Composition should match the oracle at {(l1, l2)}, error {relative}"

    print("✓ Composition against the oracle working correctly")


def run_all_tests():
    """Run all test functions."""
    print("=" * 50)
    print("Running Symbol Calculus Tests")
    print("=" * 50)

    test_functions = [
        test_radial_compactification,
        test_principal_symbols_and_compatibility,
        test_composition_units_and_multipliers,
        test_leading_symbol_multiplicativity,
        test_associativity,
        test_adjoint,
        test_composition_against_oracle,
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
