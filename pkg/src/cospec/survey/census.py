"""Cospectral classes, NUS3 / NUS3C membership and replaceable-structure censuses."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from ..canon import automorphism_orbits
from ..graph import Graph, bits, from_graph6, is_connected, is_k_regular, to_graph6
from ..parallel import pmap
from ..removal import ReplaceableCertificate, replaceable_edges, replaceable_vertices
from ..spectrum import CharPoly, char_poly
from .catalog import Catalog


@dataclass(frozen=True)
class CospectralClass:
    fingerprint: CharPoly
    members: tuple[int, ...]


def partition_cospectral(cat: Catalog) -> list[CospectralClass]:
    groups: dict[CharPoly, list[int]] = {}
    for i, g in enumerate(cat.graphs):
        groups.setdefault(char_poly(g), []).append(i)
    classes = [CospectralClass(p, tuple(m)) for p, m in groups.items()]
    classes.sort(key=lambda c: c.fingerprint.to_bytes())
    return classes


def nus3(classes) -> set[int]:
    return {i for c in classes if len(c.members) >= 2 for i in c.members}


# -- cyclic edge connectivity ---------------------------------------------------------

def has_cyclic_cut(g: Graph, max_size: int = 3) -> bool:
    """Some set of at most ``max_size`` edges splits ``g`` into >= 2 components,
    each containing a cycle (edges >= vertices)."""
    es = g.edges()
    for size in range(1, max_size + 1):
        for cut in combinations(es, size):
            rows = list(g.adj)
            for a, b in cut:
                rows[a] &= ~(1 << b)
                rows[b] &= ~(1 << a)
            left = (1 << g.n) - 1
            comps = 0
            ok = True
            while left:
                comp = left & -left
                frontier = comp
                while frontier:
                    nxt = 0
                    for v in bits(frontier):
                        nxt |= rows[v]
                    frontier = nxt & ~comp
                    comp |= nxt
                left &= ~comp
                comps += 1
                nv = comp.bit_count()
                ne = sum((rows[v] & comp).bit_count() for v in bits(comp)) // 2
                if ne < nv:
                    ok = False
                    break
            if ok and comps >= 2:
                return True
    return False


def cyclic_edge_conn_le3(g: Graph) -> bool:
    if not (is_connected(g) and is_k_regular(g, 3)):
        raise ValueError("cyclic_edge_conn_le3 expects a connected cubic graph")
    return has_cyclic_cut(g, 3)


# -- certificate discovery ---------------------------------------------------------------

def _vertex_reps(g: Graph, symmetry: bool) -> list[int]:
    if symmetry:
        return [orb[0] for orb in automorphism_orbits(g).vertex_orbits]
    return list(range(g.n))


def _edge_reps(g: Graph, symmetry: bool) -> list[tuple[int, int]]:
    if symmetry:
        return [orb[0] for orb in automorphism_orbits(g).edge_orbits]
    return g.edges()


def self_certificates(g: Graph, kind: str, symmetry: bool = True, first_only: bool = False):
    """Certificates between anchors of ``g`` lying in different orbits."""
    out: list[ReplaceableCertificate] = []
    if kind == "vertex":
        orbit = automorphism_orbits(g).vertex_orbit_index()
        reps = _vertex_reps(g, symmetry)
        find = replaceable_vertices
    else:
        orbit = automorphism_orbits(g).edge_orbit_index()
        reps = _edge_reps(g, symmetry)
        find = replaceable_edges
    for a, b in combinations(reps, 2):
        if orbit[a] == orbit[b]:
            continue
        certs = find(g, a, g, b)
        if certs and first_only:
            return certs[:1]
        out.extend(certs)
    return out


def mate_certificates(g1: Graph, g2: Graph, kind: str, symmetry: bool = True, first_only: bool = False):
    """Certificates between an anchor of ``g1`` and an anchor of ``g2``."""
    out: list[ReplaceableCertificate] = []
    if kind == "vertex":
        pairs = product(_vertex_reps(g1, symmetry), _vertex_reps(g2, symmetry))
        find = replaceable_vertices
    else:
        pairs = product(_edge_reps(g1, symmetry), _edge_reps(g2, symmetry))
        find = replaceable_edges
    for a, b in pairs:
        certs = find(g1, a, g2, b)
        if certs and first_only:
            return certs[:1]
        out.extend(certs)
    return out


# -- censuses -------------------------------------------------------------------------------

def _self_flags(job):
    g6, symmetry = job
    g = from_graph6(g6)
    return (
        bool(self_certificates(g, "edge", symmetry, first_only=True)),
        bool(self_certificates(g, "vertex", symmetry, first_only=True)),
    )


def census_self_replaceable(cat: Catalog, symmetry: bool = True, jobs: int = 1):
    """Per-graph ``(has replaceable edges, has replaceable vertices)`` within itself,
    anchors restricted to different orbits."""
    jobs_in = [(to_graph6(g), symmetry) for g in cat.graphs]
    return pmap(_self_flags, jobs_in, jobs)


def _mate_flags(job):
    g6, mates, symmetry, loose = job
    g = from_graph6(g6)
    others = [from_graph6(m) for m in mates]
    flags = []
    for kind in ("edge", "vertex"):
        hit = any(mate_certificates(g, h, kind, symmetry, first_only=True) for h in others)
        if not hit and loose:
            hit = bool(self_certificates(g, kind, symmetry, first_only=True))
        flags.append(hit)
    return tuple(flags)


def census_mate_replaceable(cat: Catalog, classes, loose: bool = False, symmetry: bool = True, jobs: int = 1):
    """``{index: (rep edge, rep vertex)}`` for every NUS3 member.

    Strict: the certificate must pair the graph with a non-isomorphic cospectral
    mate.  Loose additionally accepts the graph paired with itself (anchors in
    different orbits).
    """
    work = []
    for c in classes:
        if len(c.members) < 2:
            continue
        for i in c.members:
            mates = [to_graph6(cat[j]) for j in c.members if j != i]
            work.append((i, (to_graph6(cat[i]), mates, symmetry, loose)))
    flags = pmap(_mate_flags, [w for _, w in work], jobs)
    return {i: f for (i, _), f in zip(work, flags)}


def catalog_certificates(cat: Catalog, classes, kind: str, symmetry: bool = True):
    """All certificates behind the constructions: cross-graph within each
    cospectral class (unordered pairs) and within-graph across orbits."""
    certs: list[ReplaceableCertificate] = []
    for c in classes:
        for i, j in combinations(c.members, 2):
            certs.extend(mate_certificates(cat[i], cat[j], kind, symmetry))
    for g in cat.graphs:
        certs.extend(self_certificates(g, kind, symmetry))
    return certs
