"""
Verification suite registry.

This module provides a registry of the named verification suites and the
checks each of them declares, enabling the verify command to run any suite
by name. A suite only declares its checks; running them, in parallel or
not, is the caller's business.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from canonical_trace.service import CanonicalTraceService
from cpowers.domain import Contour
from cpowers.service import PowerService
from meromorphic.domain import Chart, SpectralFunction
from meromorphic.service import MeromorphicService
from spectra.domain import SpectralOperator
from spectra.service import SpectraService
from symbolcore.builder import (
    from_table, identity_symbol, one_factor, random_elliptic_symbol, random_symbol, zero_symbol,
)
from symbolcore.calculus import combine, compose
from symbolcore.domain import BiOrder, ClassicalBisingularSymbol
from symbolcore.legs import LegTensorSymbol, SmoothingLeg
from symbolcore.service import SymbolService
from wodzicki.domain import CheckResult, wire_number
from wodzicki.service import WodzickiService

ETA_SHIFTS = (0.25, 1.0 / 3.0, 0.5)


@dataclass
class SuiteContext:
    """Services and knobs shared by the checks of one run."""

    spectra: SpectraService
    symbols: SymbolService
    meromorphic: MeromorphicService
    wodzicki: WodzickiService
    powers: PowerService
    canonical: CanonicalTraceService
    seed: int = 42
    grid: int = 16
    tolerance_override: Optional[float] = None
    composition_depth: Optional[int] = None
    extra_models: List[SpectralOperator] = field(default_factory=list)

    def tolerance(self, declared: float) -> float:
        return self.tolerance_override if self.tolerance_override is not None else declared

    def model(self, kind: str, **params) -> SpectralOperator:
        return self.spectra.make_model(kind, params)

    def tensor(self, kind: str, first: dict, second: Optional[dict] = None) -> SpectralOperator:
        return self.spectra.tensor({"kind": kind, "params": first}, {"kind": kind, "params": second or first})

    def exact(self, operator: SpectralOperator) -> ClassicalBisingularSymbol:
        return self.spectra.exact_symbol(operator, grid=(self.grid, self.grid))


@dataclass
class SuiteCheck:
    """A named check; `run` computes its result."""

    name: str
    run: Callable[[], CheckResult]


class VerificationSuite(ABC):
    """Abstract base class for verification suites."""

    description: str = ""

    @abstractmethod
    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        """
        Declare the checks of the suite.

        Random inputs are drawn here, in declaration order, so that results
        do not depend on the order the checks run in.

        Args:
            context: Services and knobs of the run

        Returns:
            List of SuiteCheck objects
        """
        pass


class TraceSuite(VerificationSuite):
    """Wres² vanishes on commutators."""

    description = "Wres² of commutators of random and multiplier symbols"
    pairs = 20

    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        rng = np.random.default_rng(context.seed)
        grid = (context.grid, context.grid)
        checks = []
        for i in range(self.pairs):
            a = random_symbol(rng, BiOrder(0, 0), depth=(3, 3), grid=grid)
            b = random_symbol(rng, BiOrder(0, 0), depth=(3, 3), grid=grid)
            checks.append(SuiteCheck(f"commutator-residue[{i}]", self._check(context, f"commutator-residue[{i}]",
                                                                             a, b, 1e-6)))
        first = context.exact(context.spectra.tensor({"kind": "abs_circle_dirac", "params": {"a": 0.5}},
                                                     {"kind": "abs_circle_dirac", "params": {"a": 0.25}}))
        second = context.exact(context.tensor("circle_dirac", {"a": 0.25}))
        checks.append(SuiteCheck("commutator-residue[multipliers]",
                                 self._check(context, "commutator-residue[multipliers]", first, second, 1e-14)))
        return checks

    @staticmethod
    def _check(context: SuiteContext, name: str, a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol,
               tolerance: float) -> Callable[[], CheckResult]:
        def run() -> CheckResult:
            if context.composition_depth is None:
                value = context.wodzicki.commutator_residue(a, b).value
                certificates = {}
            else:
                value = context.wodzicki.wres2_quadrature(_truncated_commutator(a, b, context.composition_depth)).value
                certificates = {"composition_depth": context.composition_depth}
            return CheckResult.compare(name, value, 0.0, context.tolerance(tolerance), certificates)
        return run


def _truncated_commutator(a: ClassicalBisingularSymbol, b: ClassicalBisingularSymbol,
                          depth: int) -> ClassicalBisingularSymbol:
    """a∘b cut at `depth` and zero-padded, minus the full b∘a."""
    full = compose(b, a)
    cut = compose(a, b, (min(depth, full.depth[0]), min(depth, full.depth[1])))
    padded = np.zeros_like(full.table)
    padded[:cut.depth[0] + 1, :cut.depth[1] + 1] = cut.table
    return combine(from_table(full.order, padded), from_table(full.order, full.table), 1.0, -1.0)


class EtaRegularitySuite(VerificationSuite):
    """η has no double pole at zero."""

    description = "Laurent coefficients of η at 0 on self-adjoint products"

    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        checks = []
        for a in ETA_SHIFTS:
            for b in ETA_SHIFTS:
                operator = context.spectra.tensor({"kind": "circle_dirac", "params": {"a": a}},
                                                  {"kind": "circle_dirac", "params": {"a": b}})
                checks.append(self._check(context, operator, product=True))
        for operator in context.extra_models:
            if operator.self_adjoint:
                checks.append(self._check(context, operator, product=False))
        return checks

    @staticmethod
    def _check(context: SuiteContext, operator: SpectralOperator, product: bool) -> SuiteCheck:
        name = f"eta-regularity[{operator.label()}]"

        def run() -> CheckResult:
            laurent = context.meromorphic.laurent(operator, SpectralFunction.ETA, 0.0, chart=Chart.A_MINUS_Z)
            certificates = {"c_minus1": abs(laurent.coefficient(-1)), "error_bound": laurent.error_bound}
            result = CheckResult.compare(name, laurent.coefficient(-2), 0.0, context.tolerance(1e-8), certificates)
            if product and abs(laurent.coefficient(-1)) > context.tolerance(1e-8):
                result.passed = False
            return result

        return SuiteCheck(name, run)


class ResidueIdentitySuite(VerificationSuite):
    """Residues of η against spectral cuts and Wres."""

    description = "Res^k η against the cut residue and m₁m₂·Wres^(k)(F|A|^{−σ})"

    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        quarter = context.tensor("circle_dirac", {"a": 0.25})
        checks = [self._at_zero(context, quarter, 2)]

        positive = context.spectra.tensor({"kind": "abs_circle_dirac", "params": {"a": 0.25}},
                                          {"kind": "abs_circle_dirac", "params": {"a": 0.5}})

        def sigma_one() -> CheckResult:
            comparison = context.wodzicki.eta_residue_via_wres(positive, 1.0)
            certificates = {"matching": list(comparison.matching),
                            "candidates": {name: wire_number(value) for name, value in comparison.candidates.items()},
                            "expected": 4.0}
            result = CheckResult.compare("residue-identity[sigma=1]", comparison.lhs, comparison.rhs,
                                         context.tolerance(1e-6), certificates)
            if abs(comparison.lhs - 4.0) > context.tolerance(1e-6):
                result.passed = False
            return result

        checks.append(SuiteCheck("residue-identity[sigma=1]", sigma_one))
        return checks

    @staticmethod
    def _at_zero(context: SuiteContext, operator: SpectralOperator, k: int) -> SuiteCheck:
        name = f"residue-identity[{operator.label()},k={k}]"

        def run() -> CheckResult:
            result = context.meromorphic.residue_identity_check(operator, 0.0, k)
            rhs = result.wres_value if result.wres_value is not None else result.cut_residue
            certificates = {"pairwise_discrepancy": result.discrepancy, "bridged": result.bridged}
            if result.cut_residue is not None:
                certificates["cut_residue"] = wire_number(result.cut_residue)
            check = CheckResult.compare(name, result.eta_residue, rhs, context.tolerance(1e-8), certificates)
            check.passed = check.passed and result.discrepancy <= context.tolerance(1e-8)
            return check

        return SuiteCheck(name, run)


class RouteAgreementSuite(VerificationSuite):
    """Spectral and quadrature Wres² agree and do not depend on Q."""

    description = "Wres² by the spectral route with Q ∈ {|D_1/2|, |D_1/3|} against cosphere quadrature"

    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        generators = [context.model("abs_circle_dirac", a=0.5), context.model("abs_circle_dirac", a=1.0 / 3.0)]
        operators = [context.tensor("circle_power", {"a": 0.5, "p": -1.0}),
                     context.tensor("circle_power", {"a": 0.5, "p": -1.0, "parity": 1}),
                     context.tensor("circle_power", {"a": 0.5, "p": -2.0})]
        operators += [m for m in context.extra_models if context.spectra.has_symbol(m)]
        checks = []
        for operator in operators:
            for q in generators:
                checks.append(self._check(context, operator, q))
        inverse = operators[0]
        checks.append(SuiteCheck("route-agreement[value]", lambda: CheckResult.compare(
            "route-agreement[value]", context.wodzicki.wres2_quadrature(context.exact(inverse)).value,
            4.0, context.tolerance(1e-6))))
        return checks

    @staticmethod
    def _check(context: SuiteContext, operator: SpectralOperator, q: SpectralOperator) -> SuiteCheck:
        name = f"route-agreement[{operator.label()},Q={q.label()}]"

        def run() -> CheckResult:
            quadrature = context.wodzicki.wres2_quadrature(context.exact(operator))
            spectral = context.wodzicki.wres_spectral(operator, q, q, k=2)
            certificates = {"quadrature_certificate": quadrature.certificate,
                            "spectral_certificate": spectral.certificate}
            return CheckResult.compare(name, spectral.value, quadrature.value, context.tolerance(1e-6), certificates)

        return SuiteCheck(name, run)


class CanonicalTraceSuite(VerificationSuite):
    """TRb against operator traces, its trace property and its family residues."""

    description = "TRb on trace-class orders, on commutators and on power families"

    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        canonical = context.canonical

        def power_tensor(a, p, b, q):
            return context.spectra.tensor({"kind": "circle_power", "params": {"a": a, "p": p}},
                                          {"kind": "circle_power", "params": {"a": b, "p": q}})

        def square_inverse() -> CheckResult:
            value = canonical.trb_of_model(power_tensor(0.5, -2.0, 0.5, -2.0))
            return CheckResult.compare("trb[pi^4]", value.value, math.pi ** 4, context.tolerance(1e-8),
                                       {"certificate": value.certificate})

        def spectral() -> CheckResult:
            operator = power_tensor(0.25, -1.5, 1.0 / 3.0, -3.0)
            value = canonical.trb_of_model(operator)
            trace, bound = canonical.spectral_trace(operator)
            return CheckResult.compare("trb[spectral-trace]", value.value, trace, context.tolerance(1e-8) + bound,
                                       {"certificate": value.certificate, "tail_bound": bound})

        def commutator_trace() -> CheckResult:
            b = context.exact(power_tensor(0.25, -0.3, 1.0 / 3.0, -0.4))
            c = context.exact(power_tensor(0.25, -0.5, 1.0 / 3.0, -0.9))
            value = canonical.trb(combine(compose(b, c), compose(c, b), 1.0, -1.0)).value
            return CheckResult.compare("trb[commutator]", value, 0.0, context.tolerance(1e-12))

        def family() -> CheckResult:
            result = canonical.trb_family_residue(canonical.power_family((0.5, 0.5)), -1)
            certificates = {"sign": result.sign, "chart": dict(result.chart), "error_bound": result.error_bound}
            return CheckResult.compare("trb[family-residue]", result.residue, result.sign * result.wres2,
                                       context.tolerance(1e-6), certificates)

        return [SuiteCheck("trb[pi^4]", square_inverse), SuiteCheck("trb[spectral-trace]", spectral),
                SuiteCheck("trb[commutator]", commutator_trace), SuiteCheck("trb[family-residue]", family)]


class ComplexPowersSuite(VerificationSuite):
    """Contour powers, the leading-symbol law, the semigroup and the sign operator."""

    description = "Scalar contour powers and complex powers of symbols"
    samples = 200

    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        powers = context.powers
        rng = np.random.default_rng(context.seed)
        moduli = rng.uniform(0.5, 10.0, self.samples)
        angles = rng.uniform(-1.2, 1.2, self.samples)
        exponents = rng.uniform(-3.0, 0.0, self.samples) + 1j * rng.uniform(-1.0, 1.0, self.samples)
        points = moduli * np.exp(1j * angles)
        elliptic = random_elliptic_symbol(rng, BiOrder(1.0, 1.0), depth=(2, 2), grid=(context.grid, context.grid))

        def scalar() -> CheckResult:
            errors = [abs(powers.contour_power_scalar(p, z, Contour.circle(p, 0.5 * abs(p))) - p ** z)
                      for p, z in zip(points, exponents)]
            worst = int(np.argmax(errors))
            return CheckResult.compare("contour-power[scalar]", errors[worst], 0.0, context.tolerance(1e-9),
                                       {"samples": self.samples, "worst_point": wire_number(points[worst]),
                                        "worst_exponent": wire_number(exponents[worst])})

        def leading() -> CheckResult:
            z = -0.7
            power = powers.complex_power(elliptic, z)
            error = float(np.max(np.abs(power.symbol.table[0, 0] - elliptic.table[0, 0] ** z)))
            return CheckResult.compare("complex-power[leading-symbol]", error, 0.0, context.tolerance(1e-9),
                                       {"exponent": z, "certificate": power.certificate})

        def semigroup() -> CheckResult:
            a = context.exact(context.spectra.tensor({"kind": "abs_circle_dirac", "params": {"a": 0.25}},
                                                     {"kind": "abs_circle_dirac", "params": {"a": 0.25}}))
            half = powers.complex_power_symbol(a, -0.5)
            inverse = powers.complex_power_symbol(a, -1)
            error = float(np.max(np.abs(compose(half, half).table - inverse.table)))
            return CheckResult.compare("complex-power[semigroup]", error, 0.0, context.tolerance(1e-10))

        def sign_square() -> CheckResult:
            dirac = context.exact(context.tensor("circle_dirac", {"a": 0.25}))
            defect = powers.sign_square_defect(powers.sign_operator_symbol(dirac))
            return CheckResult.compare("sign-operator[square]", defect, 0.0, context.tolerance(1e-8))

        return [SuiteCheck("contour-power[scalar]", scalar), SuiteCheck("complex-power[leading-symbol]", leading),
                SuiteCheck("complex-power[semigroup]", semigroup), SuiteCheck("sign-operator[square]", sign_square)]


class SpectralCutSuite(VerificationSuite):
    """The spectral-cut identity and the value η(D_1/4, 0) = 1/2."""

    description = "Cut identity at regular points and η(D_1/4, 0)"
    points = 20

    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        rng = np.random.default_rng(context.seed)
        checks = []
        for a in (0.25, 1.0 / 3.0):
            operator = context.model("circle_dirac", a=a)
            for z in self._regular_points(rng):
                checks.append(self._check(context, operator, z))
        quarter = context.model("circle_dirac", a=0.25)
        checks.append(SuiteCheck("eta[D_1/4, 0]", lambda: CheckResult.compare(
            "eta[D_1/4, 0]", context.meromorphic.eta(quarter, 0.0), 0.5, context.tolerance(1e-12))))
        return checks

    def _regular_points(self, rng: np.random.Generator) -> List[complex]:
        points = []
        while len(points) < self.points:
            z = complex(rng.uniform(-3, 3), rng.uniform(-1, 1))
            if min(abs(z - 1), abs(z + 1)) >= 0.2:
                points.append(z)
        return points

    @staticmethod
    def _check(context: SuiteContext, operator: SpectralOperator, z: complex) -> SuiteCheck:
        name = f"cut-identity[{operator.label()},z={z.real:.4f}{z.imag:+.4f}j]"

        def run() -> CheckResult:
            consistent, literal = context.meromorphic.cut_identity_defect(operator, z)
            return CheckResult.compare(name, consistent, 0.0, context.tolerance(1e-9), {"literal_defect": literal})

        return SuiteCheck(name, run)


class DoublePoleSuite(VerificationSuite):
    """Coincident first poles merge into a double pole."""

    description = "Order and c₋₂ of the leading poles of ζ on tensor products"

    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        square = context.tensor("abs_circle_dirac", {"a": 0.5})
        mixed = context.spectra.tensor({"kind": "abs_circle_dirac", "params": {"a": 0.5}},
                                       {"kind": "circle_power", "params": {"a": 0.5, "p": 2.0}})

        def coincident() -> CheckResult:
            report = context.meromorphic.poles_table(square, (-1.5, -0.5, -0.5, 0.5), chart=Chart.A_Z)
            entries = [e for e in report.entries if e.order == 2]
            value = entries[0].c_minus2 if len(entries) == 1 else float("nan")
            return CheckResult.compare("double-pole[c_minus2]", value, 4.0, context.tolerance(1e-8),
                                       {"entries": len(report.entries), "double_poles": len(entries)})

        def distinct() -> CheckResult:
            report = context.meromorphic.poles_table(mixed, (-0.2, 1.2, -1.0, 1.0), chart=Chart.A_MINUS_Z)
            highest = max((e.order for e in report.entries), default=0)
            return CheckResult.compare("double-pole[distinct-orders]", highest, 1, 0.5,
                                       {"locations": [wire_number(e.location) for e in report.entries]})

        return [SuiteCheck("double-pole[c_minus2]", coincident),
                SuiteCheck("double-pole[distinct-orders]", distinct)]


class CalculusSuite(VerificationSuite):
    """Compatibility, multiplicativity of the leading symbol and radial compactification."""

    description = "Coherence of the bisingular symbol calculus"
    pairs = 10
    samples = 100

    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        symbols = context.symbols
        rng = np.random.default_rng(context.seed)
        grid = (context.grid, context.grid)
        constructed = [context.exact(context.tensor("abs_circle_dirac", {"a": 0.25}, {"a": 0.5})),
                       context.exact(context.tensor("circle_dirac", {"a": 0.25})),
                       context.exact(context.tensor("circle_power", {"a": 1.0 / 3.0, "p": -1.5}))]
        pairs = [(random_symbol(rng, BiOrder(1.0, 2.0), depth=(2, 2), grid=grid),
                  random_symbol(rng, BiOrder(-0.5, 1.0), depth=(2, 2), grid=grid)) for _ in range(self.pairs)]
        xis = rng.standard_normal((self.samples, 2)) * 10

        def compatibility() -> CheckResult:
            products = [compose(a, b) for a, b in pairs]
            error = max(symbols.compatibility_check(s).max_error for s in constructed + products)
            return CheckResult.compare("calculus[compatibility]", error, 0.0, context.tolerance(1e-12),
                                       {"symbols": len(constructed) + len(products)})

        def multiplicativity() -> CheckResult:
            error = max(float(np.max(np.abs(compose(a, b).table[0, 0] - a.table[0, 0] * b.table[0, 0])))
                        for a, b in pairs)
            return CheckResult.compare("calculus[leading-multiplicativity]", error, 0.0, context.tolerance(1e-10))

        def round_trip() -> CheckResult:
            error = 0.0
            for xi in xis:
                z, z0 = symbols.rc_map(xi)
                error = max(error, float(np.max(np.abs(symbols.rc_inverse(z0, z) - xi))))
            return CheckResult.compare("calculus[rc-round-trip]", error, 0.0, context.tolerance(1e-12))

        return [SuiteCheck("calculus[compatibility]", compatibility),
                SuiteCheck("calculus[leading-multiplicativity]", multiplicativity),
                SuiteCheck("calculus[rc-round-trip]", round_trip)]


class IdempotentSuite(VerificationSuite):
    """Wres² vanishes on idempotents."""

    description = "Wres² of finite-rank, leg-tensor and trivial projections"

    def checks(self, context: SuiteContext) -> List[SuiteCheck]:
        vector = np.zeros(16)
        vector[9] = 1.0
        positive_part = one_factor(0.0, [lambda t, w: (1 + w) / 2, 0.0, 0.0], context.grid,
                                   evaluate=lambda theta, l: (1.0 + np.sign(np.asarray(l) + 0.25)) / 2)
        projections = {
            "explicit": context.model("explicit", values=[1.0] * 6),
            "finite-rank": context.model("finite_rank_projection", rank=3),
            "leg-tensor": LegTensorSymbol(factor=positive_part, leg=SmoothingLeg.rank_one(vector)),
            "zero": zero_symbol(BiOrder(0, 0), depth=(2, 2)),
            "identity": identity_symbol(depth=(2, 2)),
        }
        checks = []
        for label, projection in projections.items():
            name = f"idempotent[{label}]"
            checks.append(SuiteCheck(name, self._check(context, name, projection)))
        return checks

    @staticmethod
    def _check(context: SuiteContext, name: str, projection) -> Callable[[], CheckResult]:
        def run() -> CheckResult:
            result = context.wodzicki.projection_residue(projection)
            return CheckResult.compare(name, result.value, 0.0, context.tolerance(1e-8),
                                       {"route": result.route.value, "certificate": result.certificate})
        return run


class SuiteRegistry:
    """
    Registry for verification suites.

    Provides a pluggable set of named suites behind the verify command.
    """

    def __init__(self):
        """Initialize the registry with the default suites."""
        self._suites: Dict[str, VerificationSuite] = {
            'trace': TraceSuite(),
            'eta-regularity': EtaRegularitySuite(),
            'residue-identity': ResidueIdentitySuite(),
            'route-agreement': RouteAgreementSuite(),
            'canonical-trace': CanonicalTraceSuite(),
            'complex-powers': ComplexPowersSuite(),
            'spectral-cut': SpectralCutSuite(),
            'double-pole': DoublePoleSuite(),
            'calculus': CalculusSuite(),
            'idempotent': IdempotentSuite(),
        }

    def register_suite(self, name: str, suite: VerificationSuite) -> None:
        """
        Register a new suite.

        Args:
            name: Suite name used on the command line
            suite: VerificationSuite instance
        """
        self._suites[name] = suite

    def get_suite(self, name: str) -> Optional[VerificationSuite]:
        """
        Get the suite registered under a name.

        Returns:
            VerificationSuite instance or None if not found
        """
        return self._suites.get(name)

    def get_available_suites(self) -> List[str]:
        return list(self._suites.keys())

    def has_suite(self, name: str) -> bool:
        return name in self._suites
