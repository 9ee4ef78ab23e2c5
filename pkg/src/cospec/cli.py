"""Command line interface: ``cospec <subcommand> ...``.

Exit status: 0 success, 1 validation failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .bijection import Bijection, BijectionError
from .compose import (
    CompositionError,
    Family,
    FamilyConstructionPlan,
    all_seed_plans,
    batch_edge_construction,
    batch_vertex_construction,
)
from .graph import Graph6Error, GraphError, from_graph6, to_graph6
from .removal import replaceable_edges, replaceable_vertices
from .survey.catalog import CatalogError, generate_cubic, ingest_catalog
from .survey.census import partition_cospectral
from .survey.construct import constructed_outputs
from .survey.report import (
    CatalogStore,
    conjecture_ratio,
    flags_csv,
    percent,
    ratio_text,
    render_reports,
    render_rows,
    reproduce_table,
)


class ValidationError(Exception):
    pass


def _catalog_arg(text: str) -> tuple[int, str]:
    order, sep, path = text.partition("=")
    if not sep or not order.isdigit():
        raise argparse.ArgumentTypeError(f"expected ORDER=FILE, got {text!r}")
    return int(order), path


def _common(p: argparse.ArgumentParser, formats=True):
    p.add_argument("--catalog", action="append", type=_catalog_arg, default=[],
                   metavar="ORDER=FILE", help="graph6 catalog to ingest for an order")
    p.add_argument("--generate-beyond", action="store_true",
                   help="generate catalogs above order 14 instead of requiring files")
    sem = p.add_mutually_exclusive_group()
    sem.add_argument("--strict-semantics", dest="strict", action="store_true", default=True)
    sem.add_argument("--loose-semantics", dest="strict", action="store_false")
    p.add_argument("--no-symmetry-reduction", dest="symmetry", action="store_false", default=True)
    p.add_argument("--jobs", type=int, default=1)
    if formats:
        p.add_argument("--format", choices=["csv", "json", "text"], default="text")
    p.add_argument("--out", type=Path)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cospec", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write all connected cubic graphs of order N")
    p.add_argument("N", type=int)
    p.add_argument("--force", action="store_true", help="allow N above 14 (slow)")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("ingest", help="validate a graph6 catalog file")
    p.add_argument("file", type=Path)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", type=Path, help="write the catalog in canonical form")

    p = sub.add_parser("partition", help="cospectral classes of a catalog")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include singleton classes")
    _common(p)

    p = sub.add_parser("census", help="reproduce a row of Tables 1-3")
    p.add_argument("--table", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--order", type=int, action="append", required=True)
    p.add_argument("--flags", type=Path, help="per-graph flag CSV")
    p.add_argument("--figure", type=Path, help="render the rows as a figure")
    _common(p)

    p = sub.add_parser("compose", help="vertex/edge compositions of graph families")
    p.add_argument("--kind", choices=["vertex", "edge"], required=True)
    p.add_argument("--left", action="append", required=True, metavar="G6:ANCHOR",
                   help="left family member; the first is the base")
    p.add_argument("--right", action="append", required=True, metavar="G6:ANCHOR")
    p.add_argument("--seed", help="stitch map of the two bases, e.g. 1>4,2>5,3>6")
    p.add_argument("--all-seeds", action="store_true")
    p.add_argument("--provenance", type=Path, help="CSV provenance sidecar")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("constructed", help="NUS3 graphs produced by the constructions")
    p.add_argument("--order", type=int, required=True)
    _common(p)

    p = sub.add_parser("ratio", help="|constructed| / |NUS3|")
    p.add_argument("--order", type=int, action="append", required=True)
    p.add_argument("--figure", type=Path)
    _common(p)
    return ap


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _store(args) -> CatalogStore:
    return CatalogStore(dict(args.catalog), generate_beyond=args.generate_beyond)


def _anchor(kind: str, text: str):
    try:
        if kind == "vertex":
            return int(text)
        a, b = text.split("-")
        return (min(int(a), int(b)), max(int(a), int(b)))
    except ValueError as exc:
        raise ValidationError(f"bad {kind} anchor {text!r}") from exc


def _member(kind: str, text: str):
    g6, sep, anchor = text.rpartition(":")
    if not sep:
        raise ValidationError(f"expected G6:ANCHOR, got {text!r}")
    return from_graph6(g6), _anchor(kind, anchor)


def _family(kind: str, members: list[str]) -> Family:
    parsed = [_member(kind, m) for m in members]
    base, anchor = parsed[0]
    find = replaceable_vertices if kind == "vertex" else replaceable_edges
    certs = []
    for g, a in parsed[1:]:
        found = find(base, anchor, g, a)
        if not found:
            raise ValidationError(f"{to_graph6(g)}:{a} is not replaceable with the base anchor")
        certs.append(found[0])
    ids = [f"{to_graph6(g)}" for g, _ in parsed]
    return Family.from_certificates(base, anchor, certs, ids) if certs else Family.single(
        kind, base, anchor, ids[0]
    )


def _seed(text: str) -> Bijection:
    try:
        return Bijection(tuple(int(x) for x in pair.split(">")) for pair in text.split(","))
    except (ValueError, BijectionError) as exc:
        raise ValidationError(f"bad seed map {text!r}") from exc


def cmd_generate(args):
    cat = generate_cubic(args.N, beyond_envelope=args.force)
    _emit("".join(k + "\n" for k in cat.keys), args.out)


def cmd_ingest(args):
    cat = ingest_catalog(args.file, args.order)
    if args.out:
        args.out.write_text("".join(k + "\n" for k in cat.keys))
    print(f"{args.file}: {len(cat)} connected cubic graphs of order {args.order}, pairwise non-isomorphic")


def cmd_partition(args):
    cat = _store(args)(args.order)
    rows = []
    for k, c in enumerate(partition_cospectral(cat)):
        if len(c.members) < 2 and not args.all:
            continue
        rows.append({
            "class": str(k),
            "size": str(len(c.members)),
            "char_poly": c.fingerprint.text(),
            "members": " ".join(cat.keys[i] for i in c.members),
        })
    if not rows:
        rows = [{"class": "", "size": "0", "char_poly": "", "members": ""}]
    _emit(render_rows(rows, args.format), args.out)


def cmd_census(args):
    store = _store(args)
    reports = [
        reproduce_table(args.table, n, store, args.strict, args.symmetry, args.jobs)
        for n in sorted(set(args.order))
    ]
    _emit(render_reports(reports, args.format), args.out)
    if args.flags:
        args.flags.write_text("".join(
            flags_csv(r) if k == 0 else flags_csv(r).split("\n", 1)[1]
            for k, r in enumerate(reports)
        ))
    if args.figure:
        from .plotting import plot_reports

        plot_reports(reports, args.figure)


def cmd_compose(args):
    left = _family(args.kind, args.left)
    right = _family(args.kind, args.right)
    if args.all_seeds:
        plans = all_seed_plans(left, right)
    elif args.seed:
        plans = [FamilyConstructionPlan(left, right, _seed(args.seed))]
    else:
        plans = all_seed_plans(left, right)[:1]
    if not plans:
        raise ValidationError("anchor sets differ in size; no stitch map exists")
    batch = batch_vertex_construction if args.kind == "vertex" else batch_edge_construction
    lines, prov = [], io.StringIO()
    w = csv.writer(prov, lineterminator="\n")
    w.writerow(["output", "seed", "i", "j", "left", "left_anchor", "right", "right_anchor", "stitch", "graph6"])
    k = 0
    for s, plan in enumerate(plans):
        for c in batch(plan):
            g6 = to_graph6(c.graph)
            lines.append(g6 + "\n")
            stitch = ",".join(f"{a}>{b}" for a, b in c.spec.stitch.pairs)
            la, ra = c.spec.left_anchor, c.spec.right_anchor
            fmt = (lambda a: str(a) if isinstance(a, int) else f"{a[0]}-{a[1]}")
            w.writerow([k, s, c.index[0] + 1, c.index[1] + 1, c.left_id, fmt(la), c.right_id, fmt(ra), stitch, g6])
            k += 1
    _emit("".join(lines), args.out)
    if args.provenance:
        args.provenance.write_text(prov.getvalue())


def cmd_constructed(args):
    store = _store(args)
    cat = store(args.order)
    classes = partition_cospectral(cat)
    nus3_keys = {cat.keys[i] for c in classes if len(c.members) > 1 for i in c.members}
    res = constructed_outputs(args.order, store, args.strict, args.symmetry, args.jobs)
    rows = []
    for key in sorted(res.outputs & nus3_keys):
        kind, g1, a1, g2, a2, h, b, f = res.provenance[key]
        rows.append({
            "graph6": key,
            "index": str(cat.keys.index(key)),
            "kind": kind,
            "g1": g1,
            "anchor1": str(a1),
            "g2": g2,
            "anchor2": str(a2),
            "h": h,
            "h_anchor": str(b),
            "stitch": ",".join(f"{x}>{y}" for x, y in f),
        })
    if args.format == "json":
        text = json.dumps({
            "order": args.order,
            "semantics": "strict" if args.strict else "loose",
            "nus3": len(nus3_keys),
            "constructed": len(rows),
            "percent": percent(len(rows), len(nus3_keys)),
            "graphs": rows,
        }, indent=2) + "\n"
    else:
        text = render_rows(rows, args.format) if rows else ""
        if args.format == "text":
            text += f"constructed {len(rows)} of {len(nus3_keys)} NUS3 graphs of order {args.order}\n"
    _emit(text, args.out)


def cmd_ratio(args):
    store = _store(args)
    orders = sorted(set(args.order))
    rows, ratios = [], []
    for n in orders:
        r, rep = conjecture_ratio(n, store, args.strict, args.symmetry, args.jobs)
        ratios.append(r)
        rows.append({
            "order": str(n),
            "constructed": str(rep.counts["constructed"]),
            "nus3": str(rep.counts["nus3"]),
            "ratio": "n/a" if r is None else f"{r.numerator}/{r.denominator}",
            "decimal": ratio_text(r).split(" ", 1)[-1].strip("()") if r is not None else "n/a",
        })
    _emit(render_rows(rows, args.format), args.out)
    if args.figure:
        from .plotting import plot_ratio

        plot_ratio(orders, ratios, args.figure)


COMMANDS = {
    "generate": cmd_generate,
    "ingest": cmd_ingest,
    "partition": cmd_partition,
    "census": cmd_census,
    "compose": cmd_compose,
    "constructed": cmd_constructed,
    "ratio": cmd_ratio,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        COMMANDS[args.command](args)
    except (ValidationError, CatalogError, Graph6Error, GraphError, CompositionError, BijectionError) as exc:
        print(f"cospec: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
