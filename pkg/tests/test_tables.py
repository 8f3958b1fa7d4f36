import logging

import pytest
from rich.console import Console

from reporting.tables import TABLES, annotations, render, reproduce


@pytest.mark.parametrize("table", sorted(TABLES))
def test_published_tables_reproduce(table):
    results = reproduce(table)
    failed = [(r.cell.instance, r.cell.label, r.value, r.cell.expected) for r in results if not r.ok]
    assert not failed


def test_table_shapes():
    assert len([c for c in TABLES[1] if c.method != "oracle"]) == 4
    assert len([c for c in TABLES[3] if c.method != "oracle"]) == 12
    for name in ("p1", "p2"):
        assert len([c for c in TABLES[4] if c.instance == name and c.method != "oracle"]) == 9


def test_printed_discrepancy_is_flagged(caplog):
    with caplog.at_level(logging.WARNING):
        results = reproduce(4)
    flagged = [r for r in results if r.cell.printed is not None]
    assert [(r.cell.instance, r.cell.method) for r in flagged] == [("p2", "companion_nr")]
    assert flagged[0].ok
    assert abs(flagged[0].value - flagged[0].cell.printed) > 0.05
    assert "published table prints 2.48" in caplog.text


def test_matrix_example_oracle_is_flagged(caplog):
    with caplog.at_level(logging.WARNING):
        results = reproduce(1)
    flagged = [r for r in results if r.cell.printed is not None]
    assert [r.cell.method for r in flagged] == ["oracle"]
    assert flagged[0].ok
    assert "published table prints 2.29" in caplog.text


def test_scalar_example_flags_split_numerator_and_oracle():
    results = reproduce(3)
    flagged = {r.cell.method for r in results if r.cell.printed is not None}
    assert "inf_norm" not in flagged
    assert "one_norm" not in flagged
    assert {"nr_split", "oracle", "numerator.cauchy", "numerator.montel"} <= flagged
    assert len(flagged) == 11
    for r in results:
        if r.cell.printed is not None:
            assert abs(r.value - r.cell.printed) > r.cell.tol


def test_per_term_annotation_reports_canonical_values():
    notes = annotations(3)
    assert "canonical mode gives 14.00 and 8.00" in notes[0]


def test_render_reports_success():
    console = Console(record=True, width=200)
    assert render(1, reproduce(1), console)
    assert "Table 1" in console.export_text()


def test_unknown_table():
    with pytest.raises(ValueError):
        reproduce(2)
