"""Tabular and plot-data views of experiment suites.

Three row kinds: one row per group member, one summary row per group and a
final suite-mean row.  CSV repeats the group name on every row for machine
readability; the markdown rendering shows it once per group, like the
published tables it mirrors.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

from .analysis import format_percent
from .errors import ConsistencyError
from .experiments import ExperimentSuite

CSV_HEADER = (
    "suite",
    "group",
    "member",
    "indiv",
    "base",
    "union",
    "reusability_pct",
    "extra_cost_pct",
    "row_kind",
)

ROW_KINDS = ("member", "group", "suite_mean")


@dataclass(frozen=True)
class ReportRow:
    suite_kind: str
    group_name: str
    member_label: str
    indiv_count: int | None
    base_count: int | None
    union_count: int | None
    reusability_pct: str
    extra_cost_pct: str
    row_kind: str

    @property
    def is_mean_row(self) -> bool:
        return self.row_kind != "member"


def rows_from_suite(suite: ExperimentSuite) -> list[ReportRow]:
    """Flatten a suite in enumeration order, member rows in input order."""
    rows = []
    for result in suite.results:
        for m in result.per_member:
            rows.append(
                ReportRow(
                    suite_kind=suite.kind,
                    group_name=result.group_name,
                    member_label=m.label,
                    indiv_count=m.size,
                    base_count=len(result.base),
                    union_count=len(result.union),
                    reusability_pct=format_percent(result.reusability),
                    extra_cost_pct=format_percent(m.extra_cost),
                    row_kind="member",
                )
            )
        rows.append(
            ReportRow(
                suite_kind=suite.kind,
                group_name=result.group_name,
                member_label="",
                indiv_count=None,
                base_count=None,
                union_count=None,
                reusability_pct=format_percent(result.reusability),
                extra_cost_pct=format_percent(result.mean_extra_cost),
                row_kind="group",
            )
        )
    rows.append(
        ReportRow(
            suite_kind=suite.kind,
            group_name="",
            member_label="",
            indiv_count=None,
            base_count=None,
            union_count=None,
            reusability_pct=format_percent(suite.mean_reusability),
            extra_cost_pct=format_percent(suite.mean_extra_cost),
            row_kind="suite_mean",
        )
    )
    return rows


def _cell(value) -> str:
    return "" if value is None else str(value)


def table_csv(suite: ExperimentSuite) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows_from_suite(suite):
        writer.writerow(
            [
                r.suite_kind,
                r.group_name,
                r.member_label,
                _cell(r.indiv_count),
                _cell(r.base_count),
                _cell(r.union_count),
                r.reusability_pct,
                r.extra_cost_pct,
                r.row_kind,
            ]
        )
    return buf.getvalue()


def parse_table_csv(text: str) -> list[ReportRow]:
    """Inverse of :func:`table_csv`; round-trips exactly."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = tuple(next(reader))
    except StopIteration:
        raise ValueError("empty table") from None
    if header != CSV_HEADER:
        raise ValueError(f"unexpected header {header!r}")

    def num(cell: str) -> int | None:
        return None if cell == "" else int(cell)

    rows = []
    for rec in reader:
        if len(rec) != len(CSV_HEADER):
            raise ValueError(f"bad record {rec!r}")
        if rec[8] not in ROW_KINDS:
            raise ValueError(f"bad row kind {rec[8]!r}")
        rows.append(
            ReportRow(
                suite_kind=rec[0],
                group_name=rec[1],
                member_label=rec[2],
                indiv_count=num(rec[3]),
                base_count=num(rec[4]),
                union_count=num(rec[5]),
                reusability_pct=rec[6],
                extra_cost_pct=rec[7],
                row_kind=rec[8],
            )
        )
    return rows


def table_markdown(suite: ExperimentSuite) -> str:
    """Markdown table; group name shown on the first member row only."""

    def row(group, member, indiv, base, union, reus, cost):
        return f"| {group} | {member} | {_cell(indiv)} | {_cell(base)} | {_cell(union)} | {reus} | {cost} |"

    lines = [
        "| Group | Member | Indiv | Base | Union | Reusability % | Extra cost % |",
        "| --- | --- | ---: | ---: | ---: | ---: | ---: |",
    ]
    for result in suite.results:
        reus = format_percent(result.reusability)
        for i, m in enumerate(result.per_member):
            lines.append(
                row(
                    result.group_name if i == 0 else "",
                    m.label,
                    m.size,
                    len(result.base),
                    len(result.union),
                    reus,
                    format_percent(m.extra_cost),
                )
            )
        lines.append(
            row("", "*group mean*", None, None, None, reus, format_percent(result.mean_extra_cost))
        )
    lines.append(
        row(
            "",
            "**suite mean**",
            None,
            None,
            None,
            format_percent(suite.mean_reusability),
            format_percent(suite.mean_extra_cost),
        )
    )
    return "\n".join(lines) + "\n"


def emit_table(suite: ExperimentSuite, format: str = "csv") -> str:
    if format == "csv":
        return table_csv(suite)
    if format == "markdown":
        return table_markdown(suite)
    raise ValueError(f"unknown table format {format!r}")


PLOT_HEADER = ("label", "reusability_pct", "extra_cost_pct")


def plot_data_csv(suite: ExperimentSuite) -> str:
    """Two-series plot data: one row per experiment plus a trailing MEAN row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(PLOT_HEADER)
    for result in suite.results:
        writer.writerow(
            [
                result.group_name,
                format_percent(result.reusability),
                format_percent(result.mean_extra_cost),
            ]
        )
    writer.writerow(
        ["MEAN", format_percent(suite.mean_reusability), format_percent(suite.mean_extra_cost)]
    )
    return buf.getvalue()


def emit_plot_data(intra: ExperimentSuite, inter: ExperimentSuite, out_dir) -> list[Path]:
    """Write both suites' plot data files.  Suites must share a catalog."""
    if intra.catalog_name != inter.catalog_name:
        raise ConsistencyError(
            f"suites come from different catalogs:"
            f" {intra.catalog_name!r} vs {inter.catalog_name!r}"
        )
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for suite in (intra, inter):
        path = out_dir / f"{suite.kind}_plot.csv"
        path.write_text(plot_data_csv(suite), encoding="utf-8")
        paths.append(path)
    return paths
