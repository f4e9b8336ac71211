"""
Verification service providing the commands of the front end.

This module provides the main public interface for pole tables, value
tables and verification suites, and maps failures to exit codes.
"""

import concurrent.futures as futures
import logging
import math
from typing import List, Optional

from canonical_trace.service import CanonicalTraceService
from cpowers.service import PowerService
from meromorphic.domain import Chart, LaurentConfig, LaurentExpansion, PoleError, SpectralFunction
from meromorphic.service import MeromorphicService
from spectra.domain import SpectralOperator
from spectra.service import SpectraService
from symbolcore.builder import CalculusConfig
from symbolcore.service import SymbolService
from wodzicki.domain import CheckResult, VerificationReport
from wodzicki.service import WodzickiService

from .domain import CommandKind, ExitCode, RunConfig, TableFunction
from .store import ReportStore, TableRow
from .suites import SuiteCheck, SuiteContext, SuiteRegistry

logger = logging.getLogger(__name__)


class VerificationService:
    """
    Main service for the poles, verify and table commands.

    Each command builds its numerical services from the run configuration,
    so runs with identical configurations write identical files.
    """

    def __init__(self, registry: Optional[SuiteRegistry] = None):
        """
        Initialize the verification service.

        Args:
            registry: Suites available to the verify command
        """
        self.registry = registry or SuiteRegistry()
        self.spectra = SpectraService()
        self.store = ReportStore()

    def run(self, config: RunConfig) -> ExitCode:
        """
        Run one command and map its outcome to an exit code.

        Returns:
            0 when everything passed, 1 when a check failed, 2 for usage or configuration errors
        """
        try:
            if config.command == CommandKind.POLES:
                return self.cmd_poles(config)
            if config.command == CommandKind.TABLE:
                return self.cmd_table(config)
            return self.cmd_verify(config)
        except (ValueError, OSError) as e:
            logger.error(f"{config.command.value} failed: {e}")
            return ExitCode.USAGE_ERROR

    def meromorphic(self, config: RunConfig) -> MeromorphicService:
        return MeromorphicService(LaurentConfig(nodes=config.nodes))

    def load_model(self, config: RunConfig) -> SpectralOperator:
        """
        Raises:
            FileNotFoundError: If the descriptor does not exist
            ValueError: If the descriptor is malformed or the model invalid
        """
        return self.spectra.load_model(config.model)

    # Commands

    def cmd_poles(self, config: RunConfig) -> ExitCode:
        """Write the pole table of the model inside the configured window."""
        operator = self.load_model(config)
        function = SpectralFunction(config.function.value)
        report = self.meromorphic(config).poles_table(operator, config.window, config.chart, function)
        self.meromorphic(config).save_poles(report, config.out, config.format.value)
        logger.info(f"Found {len(report.entries)} poles of {function.value} of {operator.label()} "
                    f"in {config.window}")
        return ExitCode.OK

    def cmd_table(self, config: RunConfig) -> ExitCode:
        """Write function values at the configured points as CSV."""
        operator = self.load_model(config)
        double = config.function == TableFunction.DOUBLE_ZETA
        rows = self.double_zeta_rows(operator, config) if double else self.value_rows(operator, config)
        self.store.save_table(rows, config.out, double=double)
        return ExitCode.OK

    def cmd_verify(self, config: RunConfig) -> ExitCode:
        """
        Run a suite and write its report.

        Returns:
            0 if all checks pass, 1 otherwise

        Raises:
            ValueError: For an unknown suite
        """
        return self.exit_code(self.verify(config))

    def verify(self, config: RunConfig) -> VerificationReport:
        """
        Run a suite, write its report if an output path is set, and log failures.

        Raises:
            ValueError: For an unknown suite
        """
        report = self.run_suite(config)
        if config.out:
            self.store.save_report(report, config.out, config.format.value)
        for check in report.failures():
            logger.warning(f"Check {check.check} failed: discrepancy "
                           f"{check.certificates.get('discrepancy')} > {check.tolerance}")
        return report

    @staticmethod
    def exit_code(report: VerificationReport) -> ExitCode:
        return ExitCode.OK if report.passed else ExitCode.CHECK_FAILED

    # Suites

    def context(self, config: RunConfig) -> SuiteContext:
        meromorphic = self.meromorphic(config)
        grid = (config.grid, config.grid)
        extra = [self.load_model(config)] if config.model else []
        return SuiteContext(spectra=self.spectra,
                            symbols=SymbolService(CalculusConfig(grid=grid)),
                            meromorphic=meromorphic,
                            wodzicki=WodzickiService(meromorphic),
                            powers=PowerService(nodes=config.nodes),
                            canonical=CanonicalTraceService(),
                            seed=config.seed,
                            grid=config.grid,
                            tolerance_override=config.tolerance,
                            composition_depth=config.composition_depth,
                            extra_models=extra)

    def run_suite(self, config: RunConfig) -> VerificationReport:
        """
        Run every check of a suite, `config.threads` at a time.

        Returns:
            VerificationReport with the checks in declaration order

        Raises:
            ValueError: For an unknown suite
        """
        suite = self.registry.get_suite(config.suite)
        if suite is None:
            raise ValueError(f"Unknown suite '{config.suite}'; available: "
                             f"{', '.join(self.registry.get_available_suites())}")
        checks = suite.checks(self.context(config))
        logger.info(f"Running {len(checks)} checks of suite {config.suite} on {config.threads} workers")
        if config.threads == 1:
            results = [self._run_check(check) for check in checks]
        else:
            with futures.ThreadPoolExecutor(max_workers=config.threads) as executor:
                wait_for = [executor.submit(self._run_check, check) for check in checks]
                results = [f.result() for f in wait_for]
        report = VerificationReport(suite=config.suite, checks=results)
        logger.info(f"Suite {config.suite}: {len(results) - len(report.failures())}/{len(results)} checks passed")
        return report

    @staticmethod
    def _run_check(check: SuiteCheck) -> CheckResult:
        """Run a check; an exception fails the check and is kept as its witness."""
        try:
            return check.run()
        except Exception as e:
            logger.error(f"Check {check.name} raised {type(e).__name__}: {e}")
            return CheckResult(check=check.name, lhs=[math.nan, math.nan], rhs=[math.nan, math.nan],
                               tolerance=1.0, passed=False,
                               certificates={"error": f"{type(e).__name__}: {e}"})

    # Tables

    def value_rows(self, operator: SpectralOperator, config: RunConfig) -> List[TableRow]:
        meromorphic = self.meromorphic(config)
        function = SpectralFunction(config.function.value)
        if function == SpectralFunction.ETA:
            chart = Chart.A_MINUS_Z
        elif function == SpectralFunction.ZETA:
            chart = config.chart
        else:
            chart = Chart.A_Z
        values = meromorphic.table(operator, function, [p.z for p in config.points], chart)
        rows = []
        for z, value in values:
            laurent = meromorphic.laurent(operator, function, z, chart) if value is None else None
            rows.append(TableRow(z=z, value=value, laurent=laurent))
        return rows

    def double_zeta_rows(self, operator: SpectralOperator, config: RunConfig) -> List[TableRow]:
        """
        Rows of Tr(Q1^{−z}⊗Q2^{−τ}) for a tensor model Q1⊗Q2; τ defaults to z.

        Raises:
            ValueError: If the model is not a tensor product
        """
        if not operator.is_tensor:
            raise ValueError(f"The double ζ needs a tensor model, got {operator.label()}")
        meromorphic = self.meromorphic(config)
        q1, q2 = operator.factors
        rows = []
        for point in config.points:
            tau = point.tau if point.tau is not None else point.z
            try:
                value = operator.scale * meromorphic.double_zeta(None, q1, q2, point.z, tau)
                rows.append(TableRow(z=point.z, tau=tau, value=value))
            except PoleError:
                rows.append(TableRow(z=point.z, tau=tau, value=None,
                                     laurent=self._double_zeta_laurent(meromorphic, operator, point.z, tau)))
        return rows

    @staticmethod
    def _double_zeta_laurent(meromorphic: MeromorphicService, operator: SpectralOperator,
                             z: complex, tau: complex) -> Optional[LaurentExpansion]:
        """Laurent data in z at fixed τ; None when τ itself is a pole."""
        q1, q2 = operator.factors
        try:
            return meromorphic.laurent_at(
                lambda w: operator.scale * meromorphic.double_zeta(None, q1, q2, w, tau), z)
        except PoleError:
            return None
