"""
Bound suites over one instance and their table / json / csv renderings.
"""

import csv
import io
import json
import logging
import time
from dataclasses import asdict, dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal

from rich.console import Console
from rich.table import Table

from bounds.matrix_bounds import SUMMARY_METHODS, associate_q, linear_matrix_bound, q_root_bound, summary_bounds
from bounds.scalar_bounds import (
    POLY_METHODS,
    RATIONAL_METHODS,
    BoundValue,
    linear_case_bound,
    poly_bound,
    rational_zero_bound,
)
from config import REPORT
from core.errors import InapplicableMethod
from core.rational import RationalMatrix, ScalarRationalFunction, to_numerator_polynomial
from spectrum.spectrum import eigenvalues_rational

logger = logging.getLogger(__name__)

NUMERATOR_PREFIX = "numerator."


@dataclass
class BoundRow:
    method: str
    value: float
    sound: bool | None
    runtime_ms: float
    notes: str = ""


@dataclass
class BoundReport:
    instance_id: str
    mode: str
    norm: str
    rows: list[BoundRow] = field(default_factory=list)
    oracle: float | None = None

    def row(self, method: str) -> BoundRow:
        for r in self.rows:
            if r.method == method:
                return r
        raise KeyError(method)

    @property
    def all_sound(self) -> bool:
        return all(r.sound is not False for r in self.rows)


# =============================================================================
# RUNNING BOUNDS
# =============================================================================


def available_methods(R: RationalMatrix) -> list[str]:
    """Every method name that can be asked for on this instance."""
    methods = ["q_root", *SUMMARY_METHODS, "linear_matrix"]
    if R.size == 1:
        methods += [*RATIONAL_METHODS, "linear_case"]
        methods += [NUMERATOR_PREFIX + m for m in POLY_METHODS]
    return methods


def run_method(R: RationalMatrix, method: str, norm: str = "spectral") -> BoundValue:
    """Evaluate one named bound.

    Raises:
        InapplicableMethod: preconditions of the method do not hold
    """
    if method == "q_root":
        return q_root_bound(associate_q(R, norm))
    if method in SUMMARY_METHODS:
        return summary_bounds(R, norm)[SUMMARY_METHODS.index(method)]
    if method == "linear_matrix":
        return linear_matrix_bound(R, norm)
    if R.size != 1:
        raise InapplicableMethod(f"{method} needs a scalar instance")
    r = ScalarRationalFunction.from_matrix(R)
    if method in RATIONAL_METHODS:
        return rational_zero_bound(r, method)
    if method == "linear_case":
        return linear_case_bound(r)
    if method.startswith(NUMERATOR_PREFIX):
        bound = poly_bound(to_numerator_polynomial(r), method[len(NUMERATOR_PREFIX) :])
        return BoundValue(bound.value, method, bound.notes)
    raise InapplicableMethod(f"unknown method {method!r}")


def compute_bounds(
    R: RationalMatrix,
    norm: str = "spectral",
    methods: list[str] | None = None,
    with_oracle: bool = True,
) -> BoundReport:
    """Run a bound suite and compare every value against the spectrum.

    Explicitly requested methods propagate InapplicableMethod; methods of
    the default suite whose preconditions fail are skipped.
    """
    explicit = methods is not None
    methods = available_methods(R) if methods is None else methods
    oracle = eigenvalues_rational(R).max_modulus if with_oracle else None
    report = BoundReport(R.name, R.mode, norm, oracle=oracle)
    slack = REPORT["soundness_slack"]

    for method in methods:
        start = time.perf_counter()
        try:
            bound = run_method(R, method, norm)
        except InapplicableMethod as e:
            if explicit:
                raise
            logger.info("skipping %s: %s", method, e)
            continue
        elapsed = 1000.0 * (time.perf_counter() - start)
        sound = None if oracle is None else bound.value >= oracle - slack
        if sound is False:
            logger.warning("%s: bound %.12g below oracle %.12g", method, bound.value, oracle)
        report.rows.append(BoundRow(method, bound.value, sound, elapsed, bound.notes))
    return report


# =============================================================================
# RENDERING
# =============================================================================


def round_half_even(value: float, decimals: int | None = None) -> str:
    decimals = REPORT["decimals"] if decimals is None else decimals
    quantum = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_EVEN))


def _sound_label(sound: bool | None) -> str:
    if sound is None:
        return "-"
    return "[green]yes[/green]" if sound else "[red]NO[/red]"


def report_table(report: BoundReport) -> Table:
    table = Table(
        title=f"{report.instance_id or 'instance'}  mode={report.mode}  norm={report.norm}",
        caption=(
            f"oracle max modulus: {round_half_even(report.oracle)}"
            if report.oracle is not None
            else "oracle not computed"
        ),
        show_header=True,
        header_style="bold cyan",
    )
    table.add_column("Method")
    table.add_column("Bound", justify="right")
    table.add_column("Sound", justify="center")
    table.add_column("ms", justify="right")
    table.add_column("Notes", style="dim")
    for row in report.rows:
        table.add_row(
            row.method,
            round_half_even(row.value),
            _sound_label(row.sound),
            f"{row.runtime_ms:.1f}",
            row.notes,
        )
    return table


def report_to_json(report: BoundReport) -> str:
    return json.dumps(asdict(report), indent=2)


def report_to_csv(report: BoundReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["instance", "mode", "norm", "method", "value", "sound", "runtime_ms", "oracle", "notes"])
    for row in report.rows:
        writer.writerow(
            [
                report.instance_id,
                report.mode,
                report.norm,
                row.method,
                repr(row.value),
                "" if row.sound is None else row.sound,
                f"{row.runtime_ms:.3f}",
                "" if report.oracle is None else repr(report.oracle),
                row.notes,
            ]
        )
    return buffer.getvalue()


def print_report(report: BoundReport, fmt: str = "table", console: Console | None = None):
    if fmt == "json":
        print(report_to_json(report))
    elif fmt == "csv":
        print(report_to_csv(report), end="")
    else:
        (console or Console()).print(report_table(report))
