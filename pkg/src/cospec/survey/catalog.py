"""Isomorph-free catalogs of connected cubic graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..canon import canonical_graph, canonical_graph6
from ..graph import Graph, Graph6Error, from_graph6, is_connected, is_k_regular, to_graph6

GENERATE_MAX = 14


class CatalogError(ValueError):
    pass


@dataclass
class Catalog:
    """Connected cubic graphs of one order, each stored in canonical labelling and
    sorted by canonical graph6, so member indices are reproducible."""

    order: int
    graphs: list[Graph]
    source: str = "generated"
    keys: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.keys:
            self.keys = [to_graph6(g) for g in self.graphs]
        self._index = {k: i for i, k in enumerate(self.keys)}

    def __len__(self):
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __getitem__(self, i) -> Graph:
        return self.graphs[i]

    def index_of(self, g: Graph) -> int | None:
        """Catalog index of the member isomorphic to ``g`` (None if absent)."""
        return self._index.get(canonical_graph6(g))

    def graph_id(self, i: int) -> str:
        return f"{self.order}:{i}"

    @classmethod
    def from_graphs(cls, order: int, graphs, source: str) -> Catalog:
        canon = {}
        for g in graphs:
            cg = canonical_graph(g)
            canon.setdefault(to_graph6(cg), cg)
        keys = sorted(canon)
        return cls(order, [canon[k] for k in keys], source, keys)


def _insert_edge_children(parent: Graph):
    """Subdivide two distinct edges of ``parent`` and join the two new vertices."""
    n = parent.n
    es = parent.edges()
    x, y = n, n + 1
    for p in range(len(es)):
        a, b = es[p]
        for q in range(p + 1, len(es)):
            c, d = es[q]
            rows = list(parent.adj) + [0, 0]
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
            rows[c] &= ~(1 << d)
            rows[d] &= ~(1 << c)
            for z, (s, t) in ((x, (a, b)), (y, (c, d))):
                rows[s] |= 1 << z
                rows[t] |= 1 << z
                rows[z] |= (1 << s) | (1 << t)
            rows[x] |= 1 << y
            rows[y] |= 1 << x
            yield Graph._trusted(n + 2, tuple(rows))


def _expand_triangle_children(parent: Graph):
    """Replace a vertex by a triangle."""
    n = parent.n
    for v in range(n):
        a, b, c = parent.neighbors(v)
        rows = list(parent.adj) + [0, 0]
        t1, t2 = n, n + 1
        # v keeps neighbour a; b and c move to the two new vertices
        rows[v] &= ~((1 << b) | (1 << c))
        rows[b] = rows[b] & ~(1 << v) | (1 << t1)
        rows[c] = rows[c] & ~(1 << v) | (1 << t2)
        rows[v] |= (1 << t1) | (1 << t2)
        rows[t1] = (1 << v) | (1 << t2) | (1 << b)
        rows[t2] = (1 << v) | (1 << t1) | (1 << c)
        yield Graph._trusted(n + 2, tuple(rows))


def _insert_diamond_children(parent: Graph):
    """Replace an edge ``a - b`` by ``a - p``, a diamond on ``p, q, r, s``, ``s - b``."""
    n = parent.n
    p, q, r, s = n, n + 1, n + 2, n + 3
    for a, b in parent.edges():
        rows = list(parent.adj) + [0, 0, 0, 0]
        rows[a] = rows[a] & ~(1 << b) | (1 << p)
        rows[b] = rows[b] & ~(1 << a) | (1 << s)
        rows[p] = (1 << a) | (1 << q) | (1 << r)
        rows[q] = (1 << p) | (1 << r) | (1 << s)
        rows[r] = (1 << p) | (1 << q) | (1 << s)
        rows[s] = (1 << q) | (1 << r) | (1 << b)
        yield Graph._trusted(n + 4, tuple(rows))


def _bridge_children(left: Graph, right: Graph):
    """Subdivide an edge in each of two disjoint graphs and join the new vertices."""
    n1, n2 = left.n, right.n
    x, y = n1 + n2, n1 + n2 + 1
    for a, b in left.edges():
        for c, d in right.edges():
            rows = list(left.adj) + [row << n1 for row in right.adj] + [0, 0]
            c, d = c + n1, d + n1
            rows[a] = rows[a] & ~(1 << b) | (1 << x)
            rows[b] = rows[b] & ~(1 << a) | (1 << x)
            rows[c] = rows[c] & ~(1 << d) | (1 << y)
            rows[d] = rows[d] & ~(1 << c) | (1 << y)
            rows[x] = (1 << a) | (1 << b) | (1 << y)
            rows[y] = (1 << c) | (1 << d) | (1 << x)
            yield Graph._trusted(n1 + n2 + 2, tuple(rows))


_GENERATED: dict[int, Catalog] = {}


def _children(order: int):
    smaller = generate_cubic(order - 2, beyond_envelope=True)
    for parent in smaller:
        yield from _insert_edge_children(parent)
        yield from _expand_triangle_children(parent)
    if order >= 8:
        for parent in generate_cubic(order - 4, beyond_envelope=True):
            yield from _insert_diamond_children(parent)
    for a in range(4, (order - 2) // 2 + 1, 2):
        b = order - 2 - a
        cat_a = generate_cubic(a, beyond_envelope=True)
        cat_b = generate_cubic(b, beyond_envelope=True)
        for i, left in enumerate(cat_a):
            for j, right in enumerate(cat_b):
                if a == b and j < i:
                    continue
                yield from _bridge_children(left, right)


def generate_cubic(order: int, *, beyond_envelope: bool = False) -> Catalog:
    """Every connected cubic graph of the given order, once each.

    Order ``N`` is grown from smaller connected cubic graphs, starting at ``K4``,
    by four operations, followed by canonical deduplication:
    subdividing two edges and joining the new vertices; expanding a vertex into
    a triangle; inserting a diamond into an edge (from order ``N - 4``); and
    bridging two smaller graphs through subdivided edges.
    Orders above 14 are refused unless ``beyond_envelope`` is set.
    """
    if order % 2 or order < 4:
        raise CatalogError(f"cubic graphs need an even order >= 4, got {order}")
    if order > GENERATE_MAX and not beyond_envelope:
        raise CatalogError(
            f"order {order} is outside the generation envelope (<= {GENERATE_MAX}); ingest a file"
        )
    if order in _GENERATED:
        return _GENERATED[order]
    if order == 4:
        k4 = Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        cat = Catalog.from_graphs(4, [k4], "generated")
    else:
        seen: dict[str, Graph] = {}
        for child in _children(order):
            cg = canonical_graph(child)
            seen.setdefault(to_graph6(cg), cg)
        keys = sorted(seen)
        cat = Catalog(order, [seen[k] for k in keys], "generated", keys)
    _GENERATED[order] = cat
    return cat


def generate_cubic_backtrack(order: int) -> list[Graph]:
    """Reference generator: degree-constrained backtracking plus canonical dedup.

    Always completes the smallest vertex with unmet degree; undiscovered
    neighbours take the next free labels in turn (a breadth-first labelling,
    which every connected graph admits).  Slow; meant for order <= 10.
    """
    n = order
    rows = [0] * n
    deg = [0] * n
    found: dict[str, Graph] = {}

    def add(a, b):
        rows[a] |= 1 << b
        rows[b] |= 1 << a
        deg[a] += 1
        deg[b] += 1

    def remove(a, b):
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        deg[a] -= 1
        deg[b] -= 1

    def rec(nxt):
        v = next((i for i in range(nxt) if deg[i] < 3), None)
        if v is None:
            if nxt == n:
                g = Graph._trusted(n, tuple(rows))
                found.setdefault(canonical_graph6(g), g)
            return
        need = 3 - deg[v]
        old = [w for w in range(v + 1, nxt) if deg[w] < 3 and not rows[v] >> w & 1]

        def choose(start, picked, need_left):
            if need_left == 0:
                fresh = 0
                _fill(picked, fresh)
                return
            for k in range(start, len(old)):
                choose(k + 1, picked + [old[k]], need_left - 1)
            # remaining neighbours are newly discovered vertices
            _fill(picked, need_left)

        def _fill(picked, fresh):
            if nxt + fresh > n:
                return
            new = list(range(nxt, nxt + fresh))
            for w in picked + new:
                add(v, w)
            rec(nxt + fresh)
            for w in picked + new:
                remove(v, w)

        choose(0, [], need)

    if n == 0:
        return []
    rec(1)
    return [found[k] for k in sorted(found)]


def ingest_catalog(path, order: int) -> Catalog:
    """Read and validate a graph6 file of connected cubic graphs of one order."""
    graphs: list[Graph] = []
    lines: list[int] = []
    with open(Path(path)) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = from_graph6(line)
            except Graph6Error as exc:
                raise CatalogError(f"line {lineno}: {exc}") from exc
            if g.n != order:
                raise CatalogError(f"line {lineno}: order {g.n}, expected {order}")
            if not is_k_regular(g, 3):
                raise CatalogError(f"line {lineno}: graph is not 3-regular")
            if not is_connected(g):
                raise CatalogError(f"line {lineno}: graph is disconnected")
            graphs.append(g)
            lines.append(lineno)
    first_line: dict[str, int] = {}
    canon = {}
    for g, lineno in zip(graphs, lines):
        cg = canonical_graph(g)
        key = to_graph6(cg)
        if key in first_line:
            raise CatalogError(
                f"line {lineno}: isomorphic to the graph on line {first_line[key]}"
            )
        first_line[key] = lineno
        canon[key] = cg
    keys = sorted(canon)
    return Catalog(order, [canon[k] for k in keys], f"ingested({path})", keys)


def write_catalog(path, cat: Catalog) -> None:
    with open(path, "w") as fh:
        for key in cat.keys:
            fh.write(key + "\n")
