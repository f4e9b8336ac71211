#!/usr/bin/env python3
"""
Command-line script for pole tables, value tables and verification suites
of bisingular operators on the torus.

HOW TO RUN:
The virtual environment .venv should be activated before running the script.

From the src directory, run:
    python bispec.py poles --model <model.json> --out <poles.json> [--window=RE_MIN,RE_MAX,IM_MIN,IM_MAX] [--chart A^z|A^-z]
    python bispec.py table --model <model.json> --out <values.csv> --function eta --points 0,0.5+1j
    python bispec.py verify --suite eta-regularity [--out report.json] [--tol 1e-8]

Examples:
    python bispec.py poles --model models/half.json --out poles.json --window=-3,0.5,-1,1
    python bispec.py table --model models/quarter_dirac.json --out eta.csv --function eta --points 0
    python bispec.py table --model models/square.json --out double.csv --function double-zeta --points 2.5:2.5
    python bispec.py verify --suite trace --composition-depth 0

Values starting with a minus sign need the --flag=value form.

Model files are JSON descriptors { "kind": "...", "params": {...} }.
Defaults for --seed, --grid, --nodes and --threads come from
BISPEC_SEED, BISPEC_GRID, BISPEC_NODES and BISPEC_THREADS (a .env file is
read if present); BISPEC_LOG_LEVEL sets the log level.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or configuration error.
"""

import argparse
import os
import sys

# Add src to the path so we can import modules
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from pydantic import ValidationError

from cli.config import configure_logging, environment_defaults
from cli.domain import CommandKind, ExitCode, RunConfig, TablePoint
from cli.service import VerificationService
from cli.suites import SuiteRegistry


def build_parser(defaults: dict) -> argparse.ArgumentParser:
    """Argument parser with environment defaults filled in."""
    parser = argparse.ArgumentParser(prog="bispec", description=__doc__.splitlines()[1])
    parser.add_argument("command", choices=[c.value for c in CommandKind], help="Subcommand")
    parser.add_argument("--model", help="Model descriptor JSON file")
    parser.add_argument("--suite", help=f"Suite name: {', '.join(SuiteRegistry().get_available_suites())}")
    parser.add_argument("--out", help="Output file")
    parser.add_argument("--format", choices=["json", "csv"], default="json", help="Output format")
    parser.add_argument("--tol", type=float, help="Tolerance replacing every declared check tolerance")
    parser.add_argument("--seed", type=int, default=defaults["seed"], help="Seed of random suites")
    parser.add_argument("--grid", type=int, default=defaults["grid"], help="θ grid size, power of two ≥ 16")
    parser.add_argument("--nodes", type=int, default=defaults["nodes"], help="Contour nodes, at least 64")
    parser.add_argument("--threads", type=int, default=defaults["threads"],
                        help="Workers running the checks of a suite")
    parser.add_argument("--window", help="Pole window RE_MIN,RE_MAX,IM_MIN,IM_MAX")
    parser.add_argument("--chart", choices=["A^z", "A^-z"], default="A^z", help="Variable convention of ζ")
    parser.add_argument("--function", default="zeta",
                        choices=["zeta", "eta", "zeta_up", "zeta_down", "double-zeta"], help="Function sampled")
    parser.add_argument("--points", default="", help="Comma-separated points z or z:tau")
    parser.add_argument("--composition-depth", type=int, help="Truncate left products in the trace suite")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    """
    Raises:
        ValueError: For malformed points or windows and invalid settings
        FileNotFoundError: If the model file does not exist
    """
    values = dict(command=args.command, model=args.model, suite=args.suite, out=args.out, format=args.format,
                  tolerance=args.tol, seed=args.seed, grid=args.grid, nodes=args.nodes, chart=args.chart,
                  function=args.function, threads=args.threads,
                  composition_depth=args.composition_depth,
                  points=[TablePoint.parse(p) for p in args.points.split(",") if p.strip()])
    if args.window:
        parts = args.window.split(",")
        if len(parts) != 4:
            raise ValueError(f"Window needs four numbers, got '{args.window}'")
        values["window"] = tuple(float(p) for p in parts)
    return RunConfig(**values)


def main():
    """Main function to run one command from command line arguments."""
    try:
        defaults = environment_defaults()
    except ValueError as e:
        print(f"✗ {e}")
        return ExitCode.USAGE_ERROR.value

    args = build_parser(defaults).parse_args()
    configure_logging(args.verbose)

    try:
        config = to_config(args)
    except ValidationError as e:
        print(f"✗ Invalid configuration: {e}")
        return ExitCode.USAGE_ERROR.value
    except (ValueError, OSError) as e:
        print(f"✗ {e}")
        return ExitCode.USAGE_ERROR.value

    print(f"Running {config.command.value}" + (f" suite {config.suite}" if config.suite else ""))
    print("=" * 80)

    service = VerificationService()
    if config.command == CommandKind.VERIFY:
        try:
            report = service.verify(config)
        except (ValueError, OSError) as e:
            print(f"✗ {e}")
            return ExitCode.USAGE_ERROR.value
        for check in report.checks:
            marker = "✓" if check.passed else "✗"
            print(f"{marker} {check.check}: |lhs − rhs| = {check.certificates.get('discrepancy')} "
                  f"(tolerance {check.tolerance})")
        if config.out:
            print(f"Report written to {config.out}")
        print("=" * 80)
        print(f"{len(report.checks) - len(report.failures())} passed, {len(report.failures())} failed")
        return service.exit_code(report).value

    code = service.run(config)
    if code == ExitCode.OK:
        print(f"✓ Written to {config.out}")
    else:
        print(f"✗ {config.command.value} failed, see the log for details")
    return code.value


if __name__ == "__main__":
    sys.exit(main())
