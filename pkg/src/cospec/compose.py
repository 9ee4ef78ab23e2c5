"""Vertex and edge compositions of graphs, and batch family constructions.

Vertex composition ``(G o H, u, h, f)``: drop ``u`` from ``G`` and ``h`` from
``H`` and join each ``x`` in ``N(u)`` to ``f(x)`` in ``N(h)``.  Edge composition
``(G <> H, e1, e2, f)``: drop ``e1`` and ``e2`` and join each endpoint ``x`` of
``e1`` to ``f(x)``.  Output vertices are numbered left first, then right.

If ``(u1, u2, g)`` is a replaceable-vertex certificate between cospectral
``G1`` and ``G2``, then ``G1 o H`` stitched by ``f`` and ``G2 o H`` stitched by
``f o g^-1`` are cospectral; the edge analogue holds for edge certificates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Literal, Sequence

from .bijection import Bijection, BijectionError
from .graph import Graph, GraphError, bits, edge
from .removal import Anchor, ReplaceableCertificate


class CompositionError(ValueError):
    pass


@dataclass(frozen=True)
class CompositionSpec:
    kind: Literal["vertex", "edge"]
    left: Graph
    left_anchor: Anchor
    right: Graph
    right_anchor: Anchor
    stitch: Bijection


@dataclass(frozen=True, eq=False)
class Composed:
    """A composition result; provenance never takes part in graph equality."""

    graph: Graph
    spec: CompositionSpec
    left_id: str | None = None
    right_id: str | None = None
    index: tuple[int, int] | None = None


def vertex_composition(spec: CompositionSpec) -> Graph:
    if spec.kind != "vertex":
        raise CompositionError("vertex_composition needs a vertex spec")
    g, u, h, v, f = spec.left, spec.left_anchor, spec.right, spec.right_anchor, spec.stitch
    nu, nv = g.neighbors(u), h.neighbors(v)
    if len(nu) != len(nv):
        raise CompositionError(f"degree mismatch: |N(u)|={len(nu)} but |N(v)|={len(nv)}")
    f = f if isinstance(f, Bijection) else Bijection(f)
    try:
        f.check(nu, nv)
    except BijectionError as exc:
        raise CompositionError(str(exc)) from exc
    left_pos = [i - (i > u) for i in range(g.n)]
    off = g.n - 1
    right_pos = [off + j - (j > v) for j in range(h.n)]
    rows = [0] * (g.n + h.n - 2)
    for a in range(g.n):
        if a == u:
            continue
        for b in bits(g.adj[a]):
            if b != u:
                rows[left_pos[a]] |= 1 << left_pos[b]
    for a in range(h.n):
        if a == v:
            continue
        for b in bits(h.adj[a]):
            if b != v:
                rows[right_pos[a]] |= 1 << right_pos[b]
    for x in nu:
        p, q = left_pos[x], right_pos[f[x]]
        rows[p] |= 1 << q
        rows[q] |= 1 << p
    return Graph(len(rows), rows)


def edge_composition(spec: CompositionSpec) -> Graph:
    if spec.kind != "edge":
        raise CompositionError("edge_composition needs an edge spec")
    g, h = spec.left, spec.right
    e1, e2 = edge(*spec.left_anchor), edge(*spec.right_anchor)
    if not g.has_edge(*e1):
        raise GraphError(f"anchor edge {e1} missing from left graph")
    if not h.has_edge(*e2):
        raise GraphError(f"anchor edge {e2} missing from right graph")
    f = spec.stitch if isinstance(spec.stitch, Bijection) else Bijection(spec.stitch)
    try:
        f.check(e1, e2)
    except BijectionError as exc:
        raise CompositionError(str(exc)) from exc
    off = g.n
    rows = list(g.adj) + [row << off for row in h.adj]
    a, b = e1
    rows[a] &= ~(1 << b)
    rows[b] &= ~(1 << a)
    c, d = e2[0] + off, e2[1] + off
    rows[c] &= ~(1 << d)
    rows[d] &= ~(1 << c)
    for x in e1:
        y = f[x] + off
        rows[x] |= 1 << y
        rows[y] |= 1 << x
    return Graph(len(rows), rows)


def compose(spec: CompositionSpec) -> Graph:
    return vertex_composition(spec) if spec.kind == "vertex" else edge_composition(spec)


def anchor_set(g: Graph, kind: str, anchor: Anchor) -> tuple[int, ...]:
    """Neighbourhood of a vertex anchor, endpoints of an edge anchor."""
    return g.neighbors(anchor) if kind == "vertex" else edge(*anchor)


def stitch_maps(g: Graph, kind: str, anchor: Anchor, h: Graph, h_anchor: Anchor) -> list[Bijection]:
    """All bijections between the two anchor sets, lexicographic order."""
    src = anchor_set(g, kind, anchor)
    dst = anchor_set(h, kind, h_anchor)
    if len(src) != len(dst):
        return []
    return [Bijection(zip(src, image)) for image in permutations(dst)]


# -- family construction ----------------------------------------------------------

@dataclass
class Family:
    """Graphs ``G_1..G_m`` with anchors ``a_i`` and maps from the base anchor set
    of ``G_1`` to that of ``G_i`` (identity for ``i = 1``)."""

    kind: Literal["vertex", "edge"]
    graphs: list[Graph]
    anchors: list[Anchor]
    maps_from_base: list[Bijection]
    ids: list[str] = field(default_factory=list)

    def __post_init__(self):
        m = len(self.graphs)
        if not (len(self.anchors) == len(self.maps_from_base) == m) or m == 0:
            raise CompositionError("family lists must be non-empty and of equal length")
        if not self.ids:
            self.ids = [f"{i + 1}" for i in range(m)]
        base = anchor_set(self.graphs[0], self.kind, self.anchors[0])
        for g, a, mp in zip(self.graphs, self.anchors, self.maps_from_base):
            try:
                mp.check(base, anchor_set(g, self.kind, a))
            except BijectionError as exc:
                raise CompositionError(f"inconsistent family map: {exc}") from exc

    @classmethod
    def single(cls, kind, graph: Graph, anchor: Anchor, gid: str = "1") -> Family:
        """Family of one graph; any vertex or edge may serve as its anchor."""
        base = anchor_set(graph, kind, anchor)
        return cls(kind, [graph], [anchor], [Bijection.identity(base)], [gid])

    @classmethod
    def from_certificates(
        cls, base: Graph, anchor: Anchor, certs: Sequence[ReplaceableCertificate], ids=None
    ) -> Family:
        """Base graph plus one certificate per additional member, each from the base."""
        kind = certs[0].kind if certs else "vertex"
        graphs, anchors = [base], [anchor]
        maps = [Bijection.identity(anchor_set(base, kind, anchor))]
        for c in certs:
            if c.g1 != base or c.g1_anchor != anchor:
                raise CompositionError("certificate does not start at the family base")
            graphs.append(c.g2)
            anchors.append(c.g2_anchor)
            maps.append(c.map)
        return cls(kind, graphs, anchors, maps, list(ids or []))

    def rebased(self, k: int) -> Family:
        """Same family with member ``k`` as the base: maps become ``g_{1i} o g_{1k}^-1``."""
        back = self.maps_from_base[k].inverse()
        order = [k] + [i for i in range(len(self.graphs)) if i != k]
        return Family(
            self.kind,
            [self.graphs[i] for i in order],
            [self.anchors[i] for i in order],
            [back.then(self.maps_from_base[i]) for i in order],
            [self.ids[i] for i in order],
        )


@dataclass
class FamilyConstructionPlan:
    left: Family
    right: Family
    seed: Bijection  # anchor set of left base -> anchor set of right base

    def __post_init__(self):
        if self.left.kind != self.right.kind:
            raise CompositionError("left and right families differ in kind")
        try:
            self.seed.check(
                anchor_set(self.left.graphs[0], self.left.kind, self.left.anchors[0]),
                anchor_set(self.right.graphs[0], self.right.kind, self.right.anchors[0]),
            )
        except BijectionError as exc:
            raise CompositionError(f"seed map: {exc}") from exc

    @property
    def kind(self):
        return self.left.kind

    def stitch(self, i: int, j: int) -> Bijection:
        """``h_{1j} o f o g_{i1}`` from the anchor set of ``G_i`` to that of ``H_j``."""
        g_i1 = self.left.maps_from_base[i].inverse()
        return g_i1.then(self.seed).then(self.right.maps_from_base[j])

    def spec(self, i: int, j: int) -> CompositionSpec:
        return CompositionSpec(
            self.kind,
            self.left.graphs[i],
            self.left.anchors[i],
            self.right.graphs[j],
            self.right.anchors[j],
            self.stitch(i, j),
        )


def _batch(plan: FamilyConstructionPlan, kind: str) -> list[Composed]:
    if plan.kind != kind:
        raise CompositionError(f"plan is of kind {plan.kind}, expected {kind}")
    out = []
    for i in range(len(plan.left.graphs)):
        for j in range(len(plan.right.graphs)):
            spec = plan.spec(i, j)
            out.append(
                Composed(compose(spec), spec, plan.left.ids[i], plan.right.ids[j], (i, j))
            )
    return out


def batch_vertex_construction(plan: FamilyConstructionPlan) -> list[Composed]:
    """The ``m * n`` compositions ``G_i o H_j`` in row-major ``(i, j)`` order."""
    return _batch(plan, "vertex")


def batch_edge_construction(plan: FamilyConstructionPlan) -> list[Composed]:
    return _batch(plan, "edge")


def all_seed_plans(left: Family, right: Family) -> list[FamilyConstructionPlan]:
    """One plan per seed bijection between the two base anchor sets."""
    seeds = stitch_maps(left.graphs[0], left.kind, left.anchors[0], right.graphs[0], right.anchors[0])
    return [FamilyConstructionPlan(left, right, s) for s in seeds]
