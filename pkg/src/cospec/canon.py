"""Canonical labelling, isomorphism and exact automorphism orbits.

Individualisation-refinement search.  Each node of the search tree is an
ordered partition made equitable by refinement; a leaf is a discrete partition,
i.e. a relabelling of the graph.  The canonical leaf minimises
``(refinement traces along the path, relabelled bit string)``.

Pruning keeps the search exact:

* a node whose trace differs from the first path and exceeds the best path
  cannot lead to the canonical leaf nor to an automorphism;
* children in the same orbit of the automorphisms found so far (restricted to
  those fixing the current prefix pointwise) have equivalent subtrees;
* once a leaf turns out equivalent to the first or best leaf, the rest of the
  subtree hanging off the common ancestor is an image of one already explored.

Because every child of a first-path node that lies in the orbit of the first
path is either explored until an automorphism is found or covered by a found
one, the found automorphisms generate the full group, so orbits are exact.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, bits, to_graph6


@dataclass(frozen=True)
class CanonicalForm:
    canonical_graph6: str
    relabeling: tuple[int, ...]  # original index -> canonical index


@dataclass(frozen=True)
class OrbitPartition:
    vertex_orbits: tuple[tuple[int, ...], ...]
    edge_orbits: tuple[tuple[tuple[int, int], ...], ...]

    def vertex_orbit_index(self) -> dict[int, int]:
        return {v: k for k, orb in enumerate(self.vertex_orbits) for v in orb}

    def edge_orbit_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, orb in enumerate(self.edge_orbits) for e in orb}


@dataclass(frozen=True)
class SearchResult:
    form: CanonicalForm
    generators: tuple[tuple[int, ...], ...]
    leaves: int


class _Partition:
    __slots__ = ("lab", "cellend", "cellof")

    def __init__(self, lab, cellend, cellof):
        self.lab = lab
        self.cellend = cellend
        self.cellof = cellof

    def copy(self):
        return _Partition(self.lab[:], dict(self.cellend), self.cellof[:])


def _refine(adj, part: _Partition, queue: list[int], n: int) -> tuple:
    """Refine to the coarsest equitable partition finer than ``part`` (in place).

    Returns a label-invariant trace of the splits performed.
    """
    lab, cellend, cellof = part.lab, part.cellend, part.cellof
    trace = []
    pending = deque(queue)
    queued = set(queue)
    ncells = len(cellend)
    while pending and ncells < n:
        w = pending.popleft()
        queued.discard(w)
        wmask = 0
        for p in range(w, cellend[w]):
            wmask |= 1 << lab[p]
        # only cells holding a neighbour of the splitter can split
        touched = set()
        hit = 0
        for v in bits(wmask):
            hit |= adj[v]
        for v in bits(hit):
            s = cellof[v]
            if cellend[s] - s > 1:
                touched.add(s)
        for s in sorted(touched):
            e = cellend[s]
            groups: dict[int, list[int]] = {}
            for p in range(s, e):
                v = lab[p]
                groups.setdefault((adj[v] & wmask).bit_count(), []).append(v)
            if len(groups) == 1:
                continue
            keys = sorted(groups)
            pos = s
            frags = []
            for k in keys:
                start = pos
                for v in groups[k]:
                    lab[pos] = v
                    cellof[v] = start
                    pos += 1
                cellend[start] = pos
                frags.append(start)
            ncells += len(keys) - 1
            trace.append((w, s, tuple((k, len(groups[k])) for k in keys)))
            if s in queued:
                extra = frags[1:]
            else:
                big = max(frags, key=lambda f: cellend[f] - f)
                extra = [f for f in frags if f != big]
            for f in extra:
                if f not in queued:
                    queued.add(f)
                    pending.append(f)
    return tuple(trace)


def _individualize(part: _Partition, v: int) -> int:
    lab, cellend, cellof = part.lab, part.cellend, part.cellof
    s = cellof[v]
    e = cellend[s]
    p = lab.index(v, s, e)
    lab[p], lab[s] = lab[s], lab[p]
    cellend[s] = s + 1
    cellend[s + 1] = e
    for q in range(s + 1, e):
        cellof[lab[q]] = s + 1
    return s


def _leaf_code(adj, lab, n) -> tuple[int, ...]:
    """Columns of the relabelled upper triangle, each read with row 0 as the most
    significant bit, so tuple order equals graph6 string order."""
    inv = [0] * n
    for p, v in enumerate(lab):
        inv[v] = p
    cols = []
    for j in range(1, n):
        col = 0
        row = adj[lab[j]]
        for w in bits(row):
            i = inv[w]
            if i < j:
                col |= 1 << (j - 1 - i)
        cols.append(col)
    return tuple(cols)


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.gens: list[tuple[int, ...]] = []
        self.first_traces = None
        self.first_code = None
        self.first_path = None
        self.first_lab = None
        self.best_traces = None
        self.best_code = None
        self.best_path = None
        self.best_lab = None
        self.leaves = 0

    def run(self) -> SearchResult:
        n = self.n
        if n == 0:
            return SearchResult(CanonicalForm(to_graph6(self.g), ()), (), 1)
        # initial partition: by degree, increasing
        degs = [row.bit_count() for row in self.adj]
        order = sorted(range(n), key=lambda v: degs[v])
        lab = order[:]
        cellend = {}
        cellof = [0] * n
        s = 0
        while s < n:
            e = s
            while e < n and degs[lab[e]] == degs[lab[s]]:
                e += 1
            cellend[s] = e
            for p in range(s, e):
                cellof[lab[p]] = s
            s = e
        part = _Partition(lab, cellend, cellof)
        root_trace = (tuple(cellend[s] - s for s in sorted(cellend)),) + _refine(
            self.adj, part, sorted(cellend), n
        )
        self._search(part, [], [root_trace], True)
        inv = [0] * n
        for p, v in enumerate(self.best_lab):
            inv[v] = p
        relabel = tuple(inv)
        form = CanonicalForm(to_graph6(self.g.relabel(relabel)), relabel)
        return SearchResult(form, tuple(self.gens), self.leaves)

    def _stab_orbits(self, prefix):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in self.gens:
            if all(gen[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(gen[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find

    def _record(self, lab_a, lab_b):
        gen = [0] * self.n
        for p in range(self.n):
            gen[lab_a[p]] = lab_b[p]
        gen = tuple(gen)
        if gen != tuple(range(self.n)) and gen not in self.gens:
            self.gens.append(gen)

    def _cmp_best(self, traces) -> int:
        """Compare a path's traces with the best path's (shorter path is smaller)."""
        best = self.best_traces
        for a, b in zip(traces, best):
            if a != b:
                return -1 if a < b else 1
        if len(traces) > len(best):
            return 1
        return 0

    def _search(self, part, path, traces, on_first):
        """Returns the depth to unwind to, or None."""
        n = self.n
        depth = len(path)
        if len(part.cellend) == n:
            return self._leaf(part, path, traces, on_first)
        cellend = part.cellend
        s = min(c for c in cellend if cellend[c] - c > 1)
        children = sorted(part.lab[s : cellend[s]])
        done: list[int] = []
        ngens = -1
        find = None
        for w in children:
            if len(self.gens) != ngens:
                ngens = len(self.gens)
                find = self._stab_orbits(path)
            rw = find(w)
            if any(find(d) == rw for d in done):
                continue
            done.append(w)
            child = part.copy()
            cell = _individualize(child, w)
            tr = (cell,) + _refine(self.adj, child, [cell], n)
            d1 = depth + 1
            child_traces = traces + [tr]
            if self.first_traces is None:
                child_first = True
            else:
                child_first = (
                    on_first and d1 < len(self.first_traces) and self.first_traces[d1] == tr
                )
                if not child_first and self._cmp_best(child_traces) > 0:
                    continue
            jump = self._search(child, path + [w], child_traces, child_first)
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, part, path, traces, on_first):
        self.leaves += 1
        code = _leaf_code(self.adj, part.lab, self.n)
        if self.first_traces is None:
            self.first_traces = list(traces)
            self.first_code = code
            self.first_path = list(path)
            self.first_lab = part.lab[:]
            self._set_best(traces, code, path, part.lab)
            return None
        if on_first and len(traces) == len(self.first_traces) and code == self.first_code:
            self._record(self.first_lab, part.lab)
            return _common(path, self.first_path)
        cmp = self._cmp_best(traces)
        if cmp == 0 and len(traces) < len(self.best_traces):
            cmp = -1
        if cmp == 0:
            if code == self.best_code:
                self._record(self.best_lab, part.lab)
                return _common(path, self.best_path)
            if code < self.best_code:
                cmp = -1
        if cmp < 0:
            self._set_best(traces, code, path, part.lab)
        return None

    def _set_best(self, traces, code, path, lab):
        self.best_traces = list(traces)
        self.best_code = code
        self.best_path = list(path)
        self.best_lab = lab[:]


def _common(a, b) -> int:
    k = 0
    while k < len(a) and k < len(b) and a[k] == b[k]:
        k += 1
    return k


@lru_cache(maxsize=100_000)
def search(g: Graph) -> SearchResult:
    return _Search(g).run()


def canonical_form(g: Graph) -> CanonicalForm:
    return search(g).form


def canonical_graph6(g: Graph) -> str:
    return search(g).form.canonical_graph6


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(search(g).form.relabeling)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_graph6(g1) == canonical_graph6(g2)


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    return search(g).generators


def _union_orbits(items, gens, act):
    index = {x: i for i, x in enumerate(items)}
    parent = list(range(len(items)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in gens:
        for x in items:
            a, b = find(index[x]), find(index[act(gen, x)])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list] = {}
    for x in items:
        groups.setdefault(find(index[x]), []).append(x)
    return tuple(tuple(sorted(grp)) for grp in sorted(groups.values(), key=min))


def _act_edge(gen, e):
    a, b = gen[e[0]], gen[e[1]]
    return (a, b) if a < b else (b, a)


@lru_cache(maxsize=100_000)
def automorphism_orbits(g: Graph) -> OrbitPartition:
    gens = automorphism_generators(g)
    vorb = _union_orbits(list(range(g.n)), gens, lambda gen, v: gen[v])
    eorb = _union_orbits(g.edges(), gens, _act_edge)
    return OrbitPartition(vorb, eorb)

