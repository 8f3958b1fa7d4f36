#!/usr/bin/env python3
"""
RatBound command-line front end
Bounds on the moduli of eigenvalues of rational matrices, reference spectra,
companion dumps, published-table reproduction and randomized benchmarks
"""

import argparse
import json
import logging
import sys

from rich.console import Console
from rich.table import Table

from companion.companion import build, companion_to_dict, companion_to_matrix_market
from config import BENCH, EXIT_CODES, SPECTRUM
from core.errors import (
    InapplicableMethod,
    NonRegularSuspected,
    ParseError,
    RatBoundError,
    ValidationError,
)
from core.io import load_instance
from core.rational import MODES
from linalg.kernels import NORMS
from reporting.bench import print_stats, run_bench
from reporting.report import compute_bounds, print_report
from reporting.tables import TABLES, render, reproduce
from spectrum.spectrum import SpectrumResult, eigenvalues_rational

LOG_FORMAT = "%(asctime)s %(levelname)s %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def parse_args(argv=None):
    """Parse command-line arguments"""
    parser = argparse.ArgumentParser(
        prog="ratbound", description="Eigenvalue-modulus bounds for rational matrices"
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bounds = sub.add_parser("bounds", help="Run a bound suite on an instance file")
    bounds.add_argument("file", help="JSON instance")
    bounds.add_argument("--norm", choices=NORMS, default="spectral", help="Induced norm (default: spectral)")
    bounds.add_argument("--mode", choices=MODES, help="Override the instance's representation mode")
    bounds.add_argument("--methods", help="Comma-separated method names (default: all applicable)")
    bounds.add_argument("--format", choices=("table", "json", "csv"), default="table")
    bounds.add_argument("--no-oracle", action="store_true", help="Skip the reference spectrum")

    spectrum = sub.add_parser("spectrum", help="Reference eigenvalues of an instance")
    spectrum.add_argument("file", help="JSON instance")
    spectrum.add_argument(
        "--tol", type=float, default=SPECTRUM["tol"], help=f"Backward-error threshold (default: {SPECTRUM['tol']:g})"
    )
    spectrum.add_argument("--format", choices=("table", "json"), default="table")

    companion = sub.add_parser("companion", help="Dump the block companion matrix")
    companion.add_argument("file", help="JSON instance")
    companion.add_argument("--format", choices=("json", "mtx"), default="json")

    report = sub.add_parser("report", help="Reproduce a published table")
    report.add_argument("--table", type=int, choices=sorted(TABLES), required=True)

    bench = sub.add_parser("bench", help="Randomized tightness benchmark")
    bench.add_argument("--count", type=int, default=BENCH["count"])
    bench.add_argument("--seed", type=int, default=BENCH["seed"])
    bench.add_argument("--p", type=int, default=BENCH["p"], help="Matrix size")
    bench.add_argument("--m", type=int, default=BENCH["m"], help="Polynomial degree")
    bench.add_argument("--poles", type=int, default=BENCH["poles"], help="Maximum number of distinct poles")
    bench.add_argument("--max-order", type=int, default=BENCH["max_order"])
    bench.add_argument("--norm", choices=NORMS, default="spectral")
    bench.add_argument("--format", choices=("table", "json", "csv"), default="csv")

    return parser.parse_args(argv)


def setup_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATE_FORMAT, stream=sys.stderr)


def exit_code_for(error: RatBoundError) -> int:
    if isinstance(error, ParseError):
        return EXIT_CODES["parse"]
    if isinstance(error, (ValidationError, InapplicableMethod)):
        return EXIT_CODES["validation"]
    if isinstance(error, NonRegularSuspected):
        return EXIT_CODES["non_regular"]
    # NumericalFailure and anything unforeseen
    return EXIT_CODES["numeric"]


# =============================================================================
# COMMANDS
# =============================================================================


def cmd_bounds(args, console: Console) -> int:
    R = load_instance(args.file)
    if args.mode:
        R = R.to_mode(args.mode)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()] if args.methods else None
    report = compute_bounds(R, args.norm, methods, with_oracle=not args.no_oracle)
    print_report(report, args.format, console)
    return EXIT_CODES["ok"]


def spectrum_to_dict(result: SpectrumResult) -> dict:
    return {
        "eigenvalues": [[z.real, z.imag] for z in result.eigenvalues.tolist()],
        "residuals": result.residuals.tolist(),
        "max_modulus": result.max_modulus,
        "rejected": [{"value": [z.real, z.imag], "reason": why} for z, why in result.rejected],
    }


def cmd_spectrum(args, console: Console) -> int:
    # regularity is probed before the monic requirement is enforced
    R = load_instance(args.file, require_monic=False)
    result = eigenvalues_rational(R, tol=args.tol)
    if args.format == "json":
        print(json.dumps(spectrum_to_dict(result), indent=2))
        return EXIT_CODES["ok"]

    table = Table(
        title=f"{R.name} spectrum",
        caption=f"max modulus {result.max_modulus:.6f}, {len(result.rejected)} candidates rejected",
        header_style="bold cyan",
    )
    table.add_column("#", justify="right")
    table.add_column("eigenvalue", justify="right")
    table.add_column("|lambda|", justify="right")
    table.add_column("backward error", justify="right")
    order = sorted(range(result.eigenvalues.size), key=lambda i: -abs(result.eigenvalues[i]))
    for n, i in enumerate(order):
        z = complex(result.eigenvalues[i])
        table.add_row(str(n), f"{z.real:+.8f} {z.imag:+.8f}i", f"{abs(z):.8f}", f"{result.residuals[i]:.2e}")
    console.print(table)
    return EXIT_CODES["ok"]


def cmd_companion(args, console: Console) -> int:
    cm = build(load_instance(args.file))
    if args.format == "mtx":
        print(companion_to_matrix_market(cm), end="")
    else:
        print(json.dumps(companion_to_dict(cm)))
    return EXIT_CODES["ok"]


def cmd_report(args, console: Console) -> int:
    results = reproduce(args.table)
    passed = render(args.table, results, console)
    console.print("[green]all cells within tolerance[/green]" if passed else "[red]table mismatch[/red]")
    return EXIT_CODES["ok"] if passed else EXIT_CODES["mismatch"]


def cmd_bench(args, console: Console) -> int:
    if args.count < 1:
        print("Error: --count must be at least 1", file=sys.stderr)
        return EXIT_CODES["validation"]
    stats, _ = run_bench(
        args.count,
        args.seed,
        args.norm,
        p=args.p,
        m=args.m,
        poles=args.poles,
        max_order=args.max_order,
    )
    title = f"bench seed={args.seed} N={args.count} p={args.p} m={args.m} poles<={args.poles}"
    print_stats(stats, args.format, title, console)
    return EXIT_CODES["ok"]


COMMANDS = {
    "bounds": cmd_bounds,
    "spectrum": cmd_spectrum,
    "companion": cmd_companion,
    "report": cmd_report,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    """Main entry point"""
    args = parse_args(argv)
    setup_logging(args.verbose)
    console = Console()

    try:
        return COMMANDS[args.command](args, console)
    except RatBoundError as e:
        print(f"Error: {e}", file=sys.stderr)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
