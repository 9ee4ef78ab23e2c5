"""Simple undirected graphs on vertices 0..n-1, stored as adjacency bitmasks."""
from __future__ import annotations

from collections.abc import Iterable

MAX_ORDER = 62


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def edge(a: int, b: int) -> tuple[int, int]:
    """Normalised unordered edge ``(min, max)``."""
    if a == b:
        raise GraphError(f"loop at vertex {a}")
    return (a, b) if a < b else (b, a)


class Graph:
    """Immutable simple graph.

    ``adj[v]`` is an int whose bit ``w`` is set iff ``v`` and ``w`` are adjacent.
    Equality is positional: two graphs are equal when they have the same order and
    the same labelled edge set.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} adjacent to index >= {n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            w = row
            while w:
                low = w & -w
                if not adj[low.bit_length() - 1] >> v & 1:
                    raise GraphError("adjacency is not symmetric")
                w ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, rows)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_hash", None)
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.adj)))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self):
        return self.n

    def has_edge(self, a: int, b: int) -> bool:
        self._check_vertex(a)
        self._check_vertex(b)
        return bool(self.adj[a] >> b & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(a, b)`` pairs with ``a < b``, ordered lexicographically."""
        out = []
        for a, row in enumerate(self.adj):
            row >>= a + 1
            b = a + 1
            while row:
                if row & 1:
                    out.append((a, b))
                row >>= 1
                b += 1
        return out

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return bits(self.adj[v])

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            m = 0
            for w in bits(row):
                m |= 1 << perm[w]
            rows[perm[v]] = m
        return Graph._trusted(self.n, tuple(rows))


def bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


# -- graph6 -----------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise GraphError(f"graph6 long form unsupported (n={n} > {MAX_ORDER})")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(line: str) -> Graph:
    s = line.rstrip("\r\n")
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} out of range 63..126", pos)
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise Graph6Error("graph6 long form unsupported", 0)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) != expected:
        raise Graph6Error(
            f"length {len(s)} does not match n={n} (expected {expected})",
            min(len(s), expected),
        )
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for pos in range(1, len(s)):
        val = ord(s[pos]) - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bit", pos)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph._trusted(n, tuple(rows))


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return [from_graph6(line) for line in fh if line.strip()]


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


# -- derived graphs -----------------------------------------------------------

def delete_vertices(g: Graph, xs: Iterable[int]) -> Graph:
    """``G \\ X`` with the remaining vertices renumbered in increasing order."""
    xs = set(xs)
    for x in xs:
        g._check_vertex(x)
    if not xs:
        return g
    keep = [v for v in range(g.n) if v not in xs]
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        m = 0
        for w in bits(g.adj[v]):
            p = pos.get(w)
            if p is not None:
                m |= 1 << p
        rows.append(m)
    return Graph._trusted(len(keep), tuple(rows))


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    a, b = edge(*e)
    if not g.has_edge(a, b):
        raise GraphError(f"edge {(a, b)} not in graph")
    rows = list(g.adj)
    rows[a] &= ~(1 << b)
    rows[b] &= ~(1 << a)
    return Graph._trusted(g.n, tuple(rows))


def neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    return g.neighbors(v)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_k_regular(g: Graph, k: int) -> bool:
    return all(row.bit_count() == k for row in g.adj)


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, in order of smallest vertex."""
    left = (1 << g.n) - 1
    out = []
    while left:
        seen = left & -left
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        out.append(seen)
        left &= ~seen
    return out


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    rows = list(g.adj) + [row << shift for row in h.adj]
    return Graph._trusted(g.n + h.n, tuple(rows))


# -- small named graphs used throughout tests and examples --------------------

def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(a, p + b) for a in range(p) for b in range(q)])


def prism(k: int = 3) -> Graph:
    """``C_k x K_2``: outer cycle 0..k-1, inner cycle k..2k-1, spokes ``i -- i+k``."""
    es = [(i, (i + 1) % k) for i in range(k)]
    es += [(k + i, k + (i + 1) % k) for i in range(k)]
    es += [(i, i + k) for i in range(k)]
    return Graph.from_edges(2 * k, es)


def petersen() -> Graph:
    es = [(i, (i + 1) % 5) for i in range(5)]
    es += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    es += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, es)
