"""Which cospectral cubic graphs arise from the vertex / edge constructions.

An *instance* is a replaceable certificate ``(G1, a1, G2, a2, g)`` taken from a
smaller catalog, a graph ``H`` with anchor ``b`` and a stitch map ``f``.  It
yields ``G1 o H`` (stitched by ``f``) and ``G2 o H`` (stitched by ``f o g^-1``),
which are cospectral.  Under the strict reading an instance only counts when
those two outputs are non-isomorphic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..bijection import Bijection
from ..canon import automorphism_orbits, canonical_graph6
from ..compose import CompositionSpec, compose, stitch_maps
from ..graph import from_graph6, to_graph6
from ..parallel import pmap
from .catalog import Catalog
from .census import catalog_certificates, partition_cospectral

CatalogSource = Callable[[int], Catalog]


@dataclass
class ConstructionResult:
    order: int
    strict: bool
    outputs: set[str] = field(default_factory=set)  # canonical graph6 of every counted output
    instances: int = 0
    qualifying: int = 0
    provenance: dict[str, tuple] = field(default_factory=dict)


def _right_anchors(h, kind, symmetry):
    if kind == "vertex":
        orbits = automorphism_orbits(h).vertex_orbits
        return [o[0] for o in orbits] if symmetry else list(range(h.n))
    orbits = automorphism_orbits(h).edge_orbits
    return [o[0] for o in orbits] if symmetry else h.edges()


def _instance_outputs(job):
    """Outputs of one certificate against one right-hand graph, over all anchors
    and stitch maps: list of (canon1, canon2, anchor, stitch pairs)."""
    kind, g1_6, a1, g2_6, a2, gmap, h6, symmetry = job
    g1, g2, h = from_graph6(g1_6), from_graph6(g2_6), from_graph6(h6)
    gmap = Bijection(gmap)
    back = gmap.inverse()
    out = []
    for b in _right_anchors(h, kind, symmetry):
        for f in stitch_maps(g1, kind, a1, h, b):
            x1 = compose(CompositionSpec(kind, g1, a1, h, b, f))
            x2 = compose(CompositionSpec(kind, g2, a2, h, b, back.then(f)))
            out.append((canonical_graph6(x1), canonical_graph6(x2), b, f.pairs))
    return out


def _certificates_by_order(source: CatalogSource, order: int, kind: str, symmetry: bool):
    cat = source(order)
    return cat, catalog_certificates(cat, partition_cospectral(cat), kind, symmetry)


def construction_jobs(order: int, source: CatalogSource, symmetry: bool = True, max_source: int | None = None):
    """Every (certificate, right graph) pair whose compositions have the given order."""
    jobs = []
    for kind, total in (("vertex", order + 2), ("edge", order)):
        for a in range(4, total - 4 + 1, 2):
            b = total - a
            if max_source is not None and max(a, b) > max_source:
                continue
            cat_a, certs = _certificates_by_order(source, a, kind, symmetry)
            if not certs:
                continue
            cat_b = source(b)
            for cert in certs:
                g1_6, g2_6 = to_graph6(cert.g1), to_graph6(cert.g2)
                for h in cat_b.graphs:
                    jobs.append(
                        (kind, g1_6, cert.g1_anchor, g2_6, cert.g2_anchor, cert.map.pairs,
                         to_graph6(h), symmetry)
                    )
    return jobs


def constructed_outputs(
    order: int,
    source: CatalogSource,
    strict: bool = True,
    symmetry: bool = True,
    jobs: int = 1,
    max_source: int | None = None,
) -> ConstructionResult:
    """Canonical forms of all construction outputs of the given order.

    ``max_source`` caps the orders of the catalogs that may supply either side.
    """
    work = construction_jobs(order, source, symmetry, max_source)
    results = pmap(_instance_outputs, work, jobs)
    res = ConstructionResult(order, strict)
    for job, outs in zip(work, results):
        for c1, c2, b, f in outs:
            res.instances += 1
            if strict and c1 == c2:
                continue
            res.qualifying += 1
            for c in (c1, c2):
                if c not in res.provenance:
                    res.provenance[c] = (job[0], job[1], job[2], job[3], job[4], job[6], b, f)
                res.outputs.add(c)
    return res


def constructed_set(
    order: int,
    source: CatalogSource,
    nus3_keys: set[str],
    strict: bool = True,
    symmetry: bool = True,
    jobs: int = 1,
    max_source: int | None = None,
) -> set[str]:
    """NUS3 graphs of the given order (as canonical graph6) produced by a
    qualifying construction instance."""
    res = constructed_outputs(order, source, strict, symmetry, jobs, max_source)
    return res.outputs & nus3_keys
