"""Removal-cospectral vertex sets and replaceable vertices / edges.

Two vertex sets ``S`` of ``G1`` and ``T`` of ``G2`` are removal cospectral under a
bijection ``f`` when ``G1 \\ X`` and ``G2 \\ f(X)`` are cospectral for every
``X`` contained in ``S``.  It suffices to check ``|X| <= 2``, which is what
:func:`removal_cospectral` does; :func:`removal_cospectral_full` checks every
subset and exists to test that equivalence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Literal, Union

from .bijection import Bijection, BijectionError
from .graph import Graph, GraphError, delete_edge, edge
from .spectrum import deletion_polys

Anchor = Union[int, tuple[int, int]]


def _as_bijection(f) -> Bijection:
    return f if isinstance(f, Bijection) else Bijection(f)


def removal_cospectral(g1: Graph, s, g2: Graph, t, f) -> bool:
    f = _as_bijection(f)
    f.check(s, t)
    d1, d2 = deletion_polys(g1), deletion_polys(g2)
    if g1.n != g2.n or d1.full != d2.full:
        return False
    s = sorted(s)
    for i in s:
        if d1.single(i) != d2.single(f[i]):
            return False
    for i, j in combinations(s, 2):
        if d1.pair(i, j) != d2.pair(f[i], f[j]):
            return False
    return True


def removal_cospectral_full(g1: Graph, s, g2: Graph, t, f) -> bool:
    """Unreduced check over all ``2**|S|`` subsets (``|S| <= 12``)."""
    f = _as_bijection(f)
    f.check(s, t)
    s = sorted(s)
    if len(s) > 12:
        raise ValueError("removal_cospectral_full is limited to |S| <= 12")
    if g1.n != g2.n:
        return False
    d1, d2 = deletion_polys(g1), deletion_polys(g2)
    for r in range(len(s) + 1):
        for xs in combinations(s, r):
            if d1.deleted(xs) != d2.deleted([f[x] for x in xs]):
                return False
    return True


def find_bijections(g1: Graph, s, g2: Graph, t) -> list[Bijection]:
    """Every bijection ``S -> T`` passing :func:`removal_cospectral`, in
    lexicographic order of the image of ``sorted(S)``."""
    s, t = sorted(s), sorted(t)
    if len(s) != len(t):
        raise BijectionError(f"|S|={len(s)} differs from |T|={len(t)}")
    if len(s) > 8:
        raise ValueError("find_bijections is limited to |S| <= 8")
    if g1.n != g2.n:
        return []
    d1, d2 = deletion_polys(g1), deletion_polys(g2)
    if d1.full != d2.full:
        return []
    allowed = [{y for y in t if d1.single(x) == d2.single(y)} for x in s]
    if any(not a for a in allowed):
        return []
    out = []
    for image in permutations(t):
        if all(y in a for y, a in zip(image, allowed)):
            ok = all(
                d1.pair(s[a], s[b]) == d2.pair(image[a], image[b])
                for a, b in combinations(range(len(s)), 2)
            )
            if ok:
                out.append(Bijection(zip(s, image)))
    return out


@dataclass(frozen=True)
class ReplaceableCertificate:
    """A verified ``(u, v, g)`` or ``(e1, e2, g)`` between two graphs."""

    kind: Literal["vertex", "edge"]
    g1_anchor: Anchor
    g2_anchor: Anchor
    map: Bijection
    g1: Graph = field(repr=False, compare=False)
    g2: Graph = field(repr=False, compare=False)

    def reversed(self) -> ReplaceableCertificate:
        return ReplaceableCertificate(
            self.kind, self.g2_anchor, self.g1_anchor, self.map.inverse(), self.g2, self.g1
        )

    def anchor_overlap(self) -> bool:
        """True for a within-graph vertex certificate whose anchors are adjacent,
        so one anchor lies inside the other's neighbourhood (reported, not special-cased)."""
        if self.kind != "vertex" or self.g1 != self.g2:
            return False
        return self.g1.has_edge(self.g1_anchor, self.g2_anchor)

    def source_set(self) -> tuple[int, ...]:
        return self.map.domain

    def target_set(self) -> tuple[int, ...]:
        return self.map.range


def replaceable_vertices(g1: Graph, u: int, g2: Graph, v: int) -> list[ReplaceableCertificate]:
    nu, nv = g1.neighbors(u), g2.neighbors(v)
    if len(nu) != len(nv):
        return []
    return [
        ReplaceableCertificate("vertex", u, v, b, g1, g2)
        for b in find_bijections(g1, nu, g2, nv)
    ]


def replaceable_edges(g1: Graph, e1, g2: Graph, e2) -> list[ReplaceableCertificate]:
    e1, e2 = edge(*e1), edge(*e2)
    if not g1.has_edge(*e1):
        raise GraphError(f"edge {e1} not in first graph")
    if not g2.has_edge(*e2):
        raise GraphError(f"edge {e2} not in second graph")
    return [
        ReplaceableCertificate("edge", e1, e2, b, g1, g2)
        for b in find_bijections(g1, e1, g2, e2)
    ]


def lemma1_extension(cert: ReplaceableCertificate):
    """``(S u {u}, T u {v}, g + (u -> v))`` for a vertex certificate."""
    u, v = cert.g1_anchor, cert.g2_anchor
    s = tuple(sorted(cert.map.domain + (u,)))
    t = tuple(sorted(cert.map.range + (v,)))
    return s, t, cert.map.extend(u, v)


def verify_lemma1(cert: ReplaceableCertificate) -> bool:
    """Closed neighbourhoods are removal cospectral under ``g`` extended by ``u -> v``."""
    if cert.kind != "vertex":
        raise ValueError("verify_lemma1 needs a vertex certificate")
    s, t, f = lemma1_extension(cert)
    return removal_cospectral(cert.g1, s, cert.g2, t, f)


def verify_lemma2(cert: ReplaceableCertificate) -> bool:
    """Endpoints stay removal cospectral after deleting the two edges."""
    if cert.kind != "edge":
        raise ValueError("verify_lemma2 needs an edge certificate")
    h1 = delete_edge(cert.g1, cert.g1_anchor)
    h2 = delete_edge(cert.g2, cert.g2_anchor)
    return removal_cospectral(h1, cert.g1_anchor, h2, cert.g2_anchor, cert.map)
