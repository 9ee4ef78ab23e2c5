"""Table rows, per-graph flags and their CSV / JSON / text renderings."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from pathlib import Path

from .catalog import Catalog, generate_cubic, GENERATE_MAX, ingest_catalog, CatalogError
from .census import (
    census_mate_replaceable,
    census_self_replaceable,
    cyclic_edge_conn_le3,
    nus3,
    partition_cospectral,
)
from .construct import constructed_set

TABLE_COLUMNS = {
    1: ["order", "total", "rep_edge", "rep_edge_pct", "rep_vertex", "rep_vertex_pct"],
    2: ["order", "nus3", "rep_edge", "rep_edge_pct", "rep_vertex", "rep_vertex_pct"],
    3: ["order", "nus3", "nus3c", "constructed", "constructed_pct_nus3", "constructed_pct_nus3c"],
}
FLAG_COLUMNS = [
    "rep_edge_self",
    "rep_vertex_self",
    "rep_edge_mate",
    "rep_vertex_mate",
    "nus3",
    "nus3c",
    "constructed",
]


def percent(count: int, total: int) -> str:
    """One decimal, round half up; a full share prints as ``100`` (as in ``63.0``, ``100``)."""
    if total == 0:
        return "n/a"
    value = (Decimal(count) * 100 / Decimal(total)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP)
    text = f"{value:.1f}"
    return "100" if text == "100.0" else text


class CatalogStore:
    """Catalog provider: ingested files take precedence, otherwise generate
    (only inside the generation envelope)."""

    def __init__(self, files: dict[int, str] | None = None, generate_beyond: bool = False):
        self.files = dict(files or {})
        self.generate_beyond = generate_beyond
        self._cache: dict[int, Catalog] = {}

    def __call__(self, order: int) -> Catalog:
        if order not in self._cache:
            if order in self.files:
                self._cache[order] = ingest_catalog(self.files[order], order)
            elif order <= GENERATE_MAX or self.generate_beyond:
                self._cache[order] = generate_cubic(order, beyond_envelope=self.generate_beyond)
            else:
                raise CatalogError(
                    f"no catalog for order {order}: supply one with --catalog {order}=FILE"
                )
        return self._cache[order]


@dataclass
class SurveyReport:
    order: int
    table: int
    counts: dict[str, int]
    flags: dict[int, dict[str, bool]] = field(default_factory=dict)
    graph6: dict[int, str] = field(default_factory=dict)
    semantics: str = "strict"
    source: str = ""

    def row(self) -> dict[str, str]:
        c = self.counts
        if self.table == 1:
            vals = [c["total"], c["rep_edge"], percent(c["rep_edge"], c["total"]),
                    c["rep_vertex"], percent(c["rep_vertex"], c["total"])]
        elif self.table == 2:
            vals = [c["nus3"], c["rep_edge"], percent(c["rep_edge"], c["nus3"]),
                    c["rep_vertex"], percent(c["rep_vertex"], c["nus3"])]
        else:
            vals = [c["nus3"], c["nus3c"], c["constructed"],
                    percent(c["constructed"], c["nus3"]), percent(c["constructed"], c["nus3c"])]
        return dict(zip(TABLE_COLUMNS[self.table], [str(self.order)] + [str(v) for v in vals]))

    def row_text(self) -> str:
        """Values after the order, comma separated, e.g. ``85, 3, 3.5, 2, 2.4``."""
        return ", ".join(list(self.row().values())[1:])

    def as_dict(self) -> dict:
        return {
            "table": self.table,
            "order": self.order,
            "semantics": self.semantics,
            "source": self.source,
            "row": self.row(),
            "graphs": [
                {"index": i, "graph6": self.graph6[i], **self.flags[i]}
                for i in sorted(self.flags)
            ],
        }


def reproduce_table(
    which: int,
    order: int,
    source: CatalogStore,
    strict: bool = True,
    symmetry: bool = True,
    jobs: int = 1,
) -> SurveyReport:
    cat = source(order)
    semantics = "strict" if strict else "loose"
    report = SurveyReport(order, which, {}, semantics=semantics, source=cat.source)
    if which == 1:
        flags = census_self_replaceable(cat, symmetry, jobs)
        for i, (e, v) in enumerate(flags):
            report.flags[i] = {"rep_edge_self": e, "rep_vertex_self": v}
        report.counts = {
            "total": len(cat),
            "rep_edge": sum(e for e, _ in flags),
            "rep_vertex": sum(v for _, v in flags),
        }
    elif which == 2:
        classes = partition_cospectral(cat)
        flags = census_mate_replaceable(cat, classes, not strict, symmetry, jobs)
        for i, (e, v) in flags.items():
            report.flags[i] = {"nus3": True, "rep_edge_mate": e, "rep_vertex_mate": v}
        report.counts = {
            "nus3": len(flags),
            "rep_edge": sum(e for e, _ in flags.values()),
            "rep_vertex": sum(v for _, v in flags.values()),
        }
    elif which == 3:
        members = sorted(nus3(partition_cospectral(cat)))
        nus3c = {i for i in members if cyclic_edge_conn_le3(cat[i])}
        keys = {cat.keys[i]: i for i in members}
        built = constructed_set(order, source, set(keys), strict, symmetry, jobs)
        for k in built:
            if keys[k] not in nus3c:
                raise AssertionError(f"constructed graph {k} has cyclic edge connectivity > 3")
        built_idx = {keys[k] for k in built}
        for i in members:
            report.flags[i] = {"nus3": True, "nus3c": i in nus3c, "constructed": i in built_idx}
        report.counts = {"nus3": len(members), "nus3c": len(nus3c), "constructed": len(built_idx)}
    else:
        raise ValueError(f"unknown table {which}")
    report.graph6 = {i: cat.keys[i] for i in report.flags}
    return report


def conjecture_ratio(order: int, source: CatalogStore, strict: bool = True, symmetry: bool = True, jobs: int = 1):
    """``|constructed| / |NUS3|`` as a Fraction (None when there are no NUS3 graphs)."""
    rep = reproduce_table(3, order, source, strict, symmetry, jobs)
    if rep.counts["nus3"] == 0:
        return None, rep
    return Fraction(rep.counts["constructed"], rep.counts["nus3"]), rep


def ratio_text(r: Fraction | None) -> str:
    if r is None:
        return "n/a"
    dec = (Decimal(r.numerator) / Decimal(r.denominator)).quantize(
        Decimal("0.0001"), rounding=ROUND_HALF_UP
    )
    return f"{r.numerator}/{r.denominator} ({dec})"


# -- renderers ---------------------------------------------------------------------------------

def render_rows(rows: list[dict[str, str]], fmt: str) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([r[c] for c in cols])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=False) + "\n"
    widths = [max(len(c), *(len(r[c]) for r in rows)) for c in cols]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    for r in rows:
        lines.append("  ".join(r[c].rjust(w) for c, w in zip(cols, widths)))
    return "\n".join(lines) + "\n"


def render_reports(reports: list[SurveyReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in reports], indent=2) + "\n"
    return render_rows([r.row() for r in reports], fmt)


def flags_csv(report: SurveyReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["order", "index", "graph6"] + FLAG_COLUMNS)
    for i in sorted(report.flags):
        f = report.flags[i]
        cells = ["" if c not in f else str(int(f[c])) for c in FLAG_COLUMNS]
        w.writerow([report.order, i, report.graph6[i]] + cells)
    return buf.getvalue()


def catalog_lines(cat: Catalog) -> str:
    return "".join(k + "\n" for k in cat.keys)


def write_text(path, text: str) -> None:
    Path(path).write_text(text)
