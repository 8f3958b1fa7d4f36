"""
Randomized tightness benchmark: bound / oracle-max-modulus ratios per method
and soundness violation counts over a seeded instance stream.
"""

import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np
from rich.console import Console
from rich.table import Table

from config import BENCH
from reporting.generator import instance_stream
from reporting.report import BoundReport, compute_bounds

logger = logging.getLogger(__name__)


@dataclass
class MethodStats:
    method: str
    instances: int
    mean_tightness: float
    max_tightness: float
    violations: int


def thread_cap() -> int | None:
    """Worker count from RATBOUND_THREADS; None lets the pool decide."""
    raw = os.environ.get(BENCH["threads_env"])
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring non-integer %s=%r", BENCH["threads_env"], raw)
        return None
    return max(1, value)


def run_bench(
    count: int = BENCH["count"],
    seed: int = BENCH["seed"],
    norm: str = "spectral",
    **params,
) -> tuple[list[MethodStats], list[BoundReport]]:
    """Evaluate the default bound suite on `count` seeded instances.

    Args:
        count: Number of instances (>= 1)
        seed: Root seed of the SeedSequence
        norm: Induced norm used by the q(x) based bounds
        params: Forwarded to generator.random_instance (p, m, poles, ...)

    Returns:
        (per-method statistics, per-instance reports in seed order)
    """
    if count < 1:
        raise ValueError("bench needs at least one instance")
    instances = instance_stream(seed, count, **params)
    with ThreadPoolExecutor(max_workers=thread_cap()) as pool:
        reports = list(pool.map(lambda R: compute_bounds(R, norm), instances))

    ratios: dict[str, list[float]] = {}
    violations: dict[str, int] = {}
    for report in reports:
        for row in report.rows:
            ratios.setdefault(row.method, [])
            violations.setdefault(row.method, 0)
            if row.sound is False:
                violations[row.method] += 1
            if report.oracle:
                ratios[row.method].append(row.value / report.oracle)

    stats = []
    for method, values in ratios.items():
        values = np.array(values)
        stats.append(
            MethodStats(
                method,
                len(values),
                float(values.mean()) if values.size else float("nan"),
                float(values.max()) if values.size else float("nan"),
                violations[method],
            )
        )
    logger.info("bench: %d instances, %d violations", count, sum(violations.values()))
    return stats, reports


def stats_table(stats: list[MethodStats], title: str) -> Table:
    table = Table(title=title, show_header=True, header_style="bold cyan")
    table.add_column("Method")
    table.add_column("n", justify="right")
    table.add_column("mean bound/oracle", justify="right")
    table.add_column("max bound/oracle", justify="right")
    table.add_column("violations", justify="right")
    for s in stats:
        table.add_row(
            s.method,
            str(s.instances),
            f"{s.mean_tightness:.4f}",
            f"{s.max_tightness:.4f}",
            f"[red]{s.violations}[/red]" if s.violations else "0",
        )
    return table


def stats_to_csv(stats: list[MethodStats]) -> str:
    lines = ["method,instances,mean_tightness,max_tightness,violations"]
    for s in stats:
        lines.append(f"{s.method},{s.instances},{s.mean_tightness!r},{s.max_tightness!r},{s.violations}")
    return "\n".join(lines) + "\n"


def print_stats(stats: list[MethodStats], fmt: str, title: str, console: Console | None = None):
    if fmt == "csv":
        print(stats_to_csv(stats), end="")
    elif fmt == "json":
        print(json.dumps([asdict(s) for s in stats], indent=2))
    else:
        (console or Console()).print(stats_table(stats, title))
