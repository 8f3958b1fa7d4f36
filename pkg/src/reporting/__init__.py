"""
Bound reports, published-table reproduction and randomized benchmarks.
"""

from .bench import MethodStats, print_stats, run_bench, stats_to_csv, thread_cap
from .generator import instance_stream, random_complex, random_instance
from .report import (
    NUMERATOR_PREFIX,
    BoundReport,
    BoundRow,
    available_methods,
    compute_bounds,
    print_report,
    report_to_csv,
    report_to_json,
    round_half_even,
    run_method,
)
from .tables import FIXTURES, TABLES, Cell, CellResult, fixture, render, reproduce

__all__ = [
    "FIXTURES",
    "NUMERATOR_PREFIX",
    "TABLES",
    "BoundReport",
    "BoundRow",
    "Cell",
    "CellResult",
    "MethodStats",
    "available_methods",
    "compute_bounds",
    "fixture",
    "instance_stream",
    "print_report",
    "print_stats",
    "random_complex",
    "random_instance",
    "render",
    "report_to_csv",
    "report_to_json",
    "reproduce",
    "round_half_even",
    "run_bench",
    "run_method",
    "stats_to_csv",
    "thread_cap",
]
