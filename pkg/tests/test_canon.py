import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from cospec.canon import (
    are_isomorphic,
    automorphism_generators,
    automorphism_orbits,
    canonical_form,
    canonical_graph6,
)
from cospec.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    from_graph6,
    path,
    petersen,
    prism,
    star,
    to_graph6,
)
from cospec.spectrum import deletion_polys
from cospec.survey.catalog import generate_cubic


def random_graph(rng, n, p=None):
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])


def shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def brute_automorphisms(g):
    es = set(g.edges())
    out = []
    for p in itertools.permutations(range(g.n)):
        if all((min(p[a], p[b]), max(p[a], p[b])) in es for a, b in es):
            out.append(p)
    return out


def brute_orbits(g):
    auts = brute_automorphisms(g)
    vo = {frozenset(p[v] for p in auts) for v in range(g.n)}
    eo = {
        frozenset((min(p[a], p[b]), max(p[a], p[b])) for p in auts) for a, b in g.edges()
    }
    return vo, eo


def as_sets(orbits):
    return {frozenset(o) for o in orbits.vertex_orbits}, {frozenset(o) for o in orbits.edge_orbits}


def test_k4_any_relabelling():
    forms = {canonical_graph6(complete(4).relabel(p)) for p in itertools.permutations(range(4))}
    assert len(forms) == 1


def test_nonisomorphic_and_isomorphic_examples():
    two_triangles = disjoint_union(complete(3), complete(3))
    assert canonical_graph6(cycle(6)) != canonical_graph6(two_triangles)
    p4 = path(4)
    other = Graph.from_edges(4, [(3, 1), (1, 0), (0, 2)])
    assert canonical_form(p4).canonical_graph6 == canonical_form(other).canonical_graph6
    assert not are_isomorphic(complete(4), cycle(4))


def test_prism_vs_k33_exhaustive():
    a, b = prism(3), complete_bipartite(3, 3)
    eb = set(b.edges())
    mapped = any(
        all((min(p[x], p[y]), max(p[x], p[y])) in eb for x, y in a.edges())
        for p in itertools.permutations(range(6))
    )
    assert not mapped
    assert not are_isomorphic(a, b)


def test_relabelling_maps_to_canonical_graph():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12))
        cf = canonical_form(g)
        assert to_graph6(g.relabel(cf.relabeling)) == cf.canonical_graph6


def test_canonical_form_relabelling_invariant_1000():
    rng = random.Random(12345)
    for k in range(1000):
        n = rng.randint(1, 16)
        g = random_graph(rng, n)
        assert canonical_graph6(g) == canonical_graph6(shuffled(g, rng)), k


def test_orbit_examples():
    o = automorphism_orbits(complete(4))
    assert o.vertex_orbits == ((0, 1, 2, 3),) and len(o.edge_orbits) == 1
    o = automorphism_orbits(star(3))
    assert o.vertex_orbits == ((0,), (1, 2, 3)) and len(o.edge_orbits) == 1
    o = automorphism_orbits(path(4))
    assert o.vertex_orbits == ((0, 3), (1, 2))
    assert o.edge_orbits == (((0, 1), (2, 3)), ((1, 2),))


def test_orbits_brute_force_random():
    rng = random.Random(99)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 7))
        assert as_sets(automorphism_orbits(g)) == brute_orbits(g)


@pytest.mark.parametrize("order", [4, 6, 8])
def test_orbits_brute_force_cubic(order):
    for g in generate_cubic(order):
        assert as_sets(automorphism_orbits(g)) == brute_orbits(g)


def test_orbits_brute_force_order8_random():
    rng = random.Random(5)
    for _ in range(12):
        g = random_graph(rng, 8, p=rng.choice([0.3, 0.5, 0.7]))
        assert as_sets(automorphism_orbits(g)) == brute_orbits(g)


def test_generators_are_automorphisms():
    for g in [petersen(), prism(5), complete_bipartite(3, 3), cycle(9)]:
        es = set(g.edges())
        for gen in automorphism_generators(g):
            assert {(min(gen[a], gen[b]), max(gen[a], gen[b])) for a, b in es} == es


def _group_size(g):
    gens = automorphism_generators(g)
    ident = tuple(range(g.n))
    seen = {ident}
    todo = [ident]
    while todo:
        x = todo.pop()
        for s in gens:
            y = tuple(s[x[i]] for i in range(g.n))
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen)


def test_generated_group_orders():
    assert _group_size(petersen()) == 120
    assert _group_size(complete_bipartite(3, 3)) == 72
    assert _group_size(prism(3)) == 12
    assert _group_size(cycle(10)) == 20


def test_same_orbit_same_deleted_polynomial(cat12):
    for g in cat12.graphs[:40]:
        d = deletion_polys(g)
        for orb in automorphism_orbits(g).vertex_orbits:
            assert len({d.single(v) for v in orb}) == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_isomorphic_iff_same_form_cubic(seed):
    rng = random.Random(seed)
    cat = generate_cubic(10)
    a, b = rng.randrange(len(cat)), rng.randrange(len(cat))
    ga, gb = shuffled(cat[a], rng), shuffled(cat[b], rng)
    assert are_isomorphic(ga, gb) == (a == b)


def test_canonical_graph6_roundtrip():
    g = petersen()
    assert canonical_graph6(from_graph6(canonical_graph6(g))) == canonical_graph6(g)
