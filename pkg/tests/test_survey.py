import itertools
import random
from fractions import Fraction

import pytest

from cospec.graph import Graph, complete, complete_bipartite, cycle, prism, to_graph6, write_graph6_file
from cospec.survey.catalog import (
    Catalog,
    CatalogError,
    generate_cubic,
    generate_cubic_backtrack,
    ingest_catalog,
    write_catalog,
)
from cospec.survey.census import (
    census_mate_replaceable,
    census_self_replaceable,
    cyclic_edge_conn_le3,
    nus3,
    partition_cospectral,
)
from cospec.survey.construct import constructed_set
from cospec.survey.report import CatalogStore, conjecture_ratio, percent, ratio_text, reproduce_table


def has_cycle(g, part):
    part = set(part)
    edges = sum(1 for a, b in g.edges() if a in part and b in part)
    # a forest on k vertices with c components has k - c edges
    comps, seen = 0, set()
    for s in part:
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in part and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return edges > len(part) - comps


def brute_cyclic_cut(g, k=3):
    """Some vertex bipartition with a cycle on each side and at most k crossing edges."""
    vs = range(g.n)
    for r in range(3, g.n - 2):
        for side in itertools.combinations(vs, r):
            if 0 not in side:
                continue
            s = set(side)
            other = [v for v in vs if v not in s]
            cut = sum(1 for a, b in g.edges() if (a in s) != (b in s))
            if cut <= k and has_cycle(g, side) and has_cycle(g, other):
                return True
    return False


@pytest.mark.parametrize("order,count", [(4, 1), (6, 2), (8, 5), (10, 19)])
def test_generate_matches_backtracking(order, count):
    grown = generate_cubic(order)
    ref = Catalog.from_graphs(order, generate_cubic_backtrack(order), "backtrack")
    assert len(grown) == count
    assert grown.keys == ref.keys


def test_generate_twelve():
    assert len(generate_cubic(12)) == 85


def test_generate_errors():
    with pytest.raises(CatalogError):
        generate_cubic(7)
    with pytest.raises(CatalogError):
        generate_cubic(16)


def test_ingest_roundtrip(tmp_path):
    cat = generate_cubic(10)
    rng = random.Random(1)
    shuffled = []
    for g in cat.graphs:
        perm = list(range(g.n))
        rng.shuffle(perm)
        shuffled.append(g.relabel(perm))
    rng.shuffle(shuffled)
    p = tmp_path / "c10.g6"
    write_graph6_file(p, shuffled)
    assert ingest_catalog(p, 10).keys == cat.keys
    q = tmp_path / "again.g6"
    write_catalog(q, cat)
    assert ingest_catalog(q, 10).keys == cat.keys


def test_ingest_errors(tmp_path):
    p = tmp_path / "bad.g6"
    g = prism(3)
    p.write_text(to_graph6(g) + "\n" + to_graph6(g.relabel([5, 4, 3, 2, 1, 0])) + "\n")
    with pytest.raises(CatalogError, match=r"line 2.*line 1"):
        ingest_catalog(p, 6)
    octahedron = Graph.from_edges(6, [(a, b) for a in range(6) for b in range(a + 1, 6) if b != a + 3 or a >= 3])
    assert all(d == 4 for d in octahedron.degrees())
    p.write_text(to_graph6(octahedron) + "\n")
    with pytest.raises(CatalogError, match="line 1.*3-regular"):
        ingest_catalog(p, 6)
    p.write_text(to_graph6(g) + "\nE?~\x7f\n")
    with pytest.raises(CatalogError, match="line 2"):
        ingest_catalog(p, 6)
    p.write_text(to_graph6(complete(4)) + "\n")
    with pytest.raises(CatalogError, match="order 4"):
        ingest_catalog(p, 6)


def test_partition_examples(cat12):
    classes = partition_cospectral(cat12)
    assert len(classes) == 85 and nus3(classes) == set()
    single = Catalog.from_graphs(4, [complete(4)], "test")
    assert [c.members for c in partition_cospectral(single)] == [(0,)]
    assert nus3(partition_cospectral(Catalog.from_graphs(4, [], "test"))) == set()


def test_nus3_order14(cat14):
    assert len(nus3(partition_cospectral(cat14))) == 6


def test_cyclic_cut_examples():
    assert cyclic_edge_conn_le3(prism(3))
    assert not cyclic_edge_conn_le3(complete_bipartite(3, 3))
    assert not cyclic_edge_conn_le3(complete(4))
    with pytest.raises(ValueError):
        cyclic_edge_conn_le3(cycle(5))


@pytest.mark.parametrize("order", [6, 8, 10])
def test_cyclic_cut_against_bipartition_oracle(order):
    for g in generate_cubic(order):
        assert cyclic_edge_conn_le3(g) == brute_cyclic_cut(g)


def test_cyclic_cut_oracle_order12_sample(cat12):
    for g in cat12.graphs[::6]:
        assert cyclic_edge_conn_le3(g) == brute_cyclic_cut(g)


@pytest.mark.parametrize(
    "count,total,text",
    [(3, 85, "3.5"), (2, 85, "2.4"), (6, 6, "100"), (4, 6, "66.7"), (1, 8, "12.5"), (1, 16, "6.3"), (0, 0, "n/a"), (0, 5, "0.0"), (6163, 9779, "63.0")],
)
def test_percent(count, total, text):
    assert percent(count, total) == text


def test_k4_census():
    cat = Catalog.from_graphs(4, [complete(4)], "test")
    assert census_self_replaceable(cat) == [(False, False)]
    assert census_mate_replaceable(cat, partition_cospectral(cat)) == {}


def test_census_invariant_under_relabelling(cat12):
    rng = random.Random(4)
    relabelled = []
    for g in cat12.graphs:
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabelled.append(g.relabel(perm))
    rng.shuffle(relabelled)
    other = Catalog.from_graphs(12, relabelled, "shuffled")
    a, b = census_self_replaceable(cat12), census_self_replaceable(other)
    assert a == b
    assert sum(e for e, _ in a) == 3 and sum(v for _, v in a) == 2


def test_symmetry_reduction_agrees(cat12):
    assert census_self_replaceable(cat12, symmetry=False) == census_self_replaceable(cat12)


def test_constructed_needs_order12_sources(cat14):
    nus = {cat14.keys[i] for i in nus3(partition_cospectral(cat14))}
    assert constructed_set(14, generate_cubic, nus, max_source=10) == set()


def test_table_rows_order12():
    store = CatalogStore()
    assert reproduce_table(1, 12, store).row_text() == "85, 3, 3.5, 2, 2.4"


def test_ratio_text():
    assert ratio_text(None) == "n/a"
    assert ratio_text(Fraction(4, 6)) == "2/3 (0.6667)"


def test_ratio_none_when_no_nus3():
    r, rep = conjecture_ratio(12, CatalogStore())
    assert r is None and rep.counts == {"nus3": 0, "nus3c": 0, "constructed": 0}


def test_store_refuses_outside_envelope():
    with pytest.raises(CatalogError, match="--catalog 18=FILE"):
        CatalogStore()(18)
