"""Acceptance criteria, one test each.  Run ``pytest -rA tests/test_acceptance.py``;
the terminal summary lists PASS / FAIL / SKIP per criterion."""
import itertools
import random
import time

import pytest

from cospec.cli import main
from cospec.compose import CompositionSpec, compose, stitch_maps
from cospec.graph import Graph, complete, complete_bipartite, prism
from cospec.removal import (
    lemma1_extension,
    removal_cospectral,
    removal_cospectral_full,
    verify_lemma1,
    verify_lemma2,
)
from cospec.spectrum import char_poly, char_poly_oracle, walks_match
from cospec.survey.catalog import generate_cubic
from cospec.survey.census import (
    catalog_certificates,
    census_self_replaceable,
    partition_cospectral,
)
from cospec.survey.report import CatalogStore, reproduce_table

from conftest import catalog16_path

criterion = pytest.mark.criterion


@pytest.fixture(scope="module")
def store():
    return CatalogStore()


def survey_certificates(cat, kind):
    return catalog_certificates(cat, partition_cospectral(cat), kind)


@criterion("table1-order12")
def test_table1_order12():
    start = time.perf_counter()
    cat = generate_cubic(12)
    flags = census_self_replaceable(cat)
    elapsed = time.perf_counter() - start
    assert len(cat) == 85
    assert sum(e for e, _ in flags) == 3
    assert sum(v for _, v in flags) == 2
    assert elapsed < 5 * 60


@criterion("table1-order14")
def test_table1_order14():
    start = time.perf_counter()
    cat = generate_cubic(14)
    flags = census_self_replaceable(cat)
    elapsed = time.perf_counter() - start
    assert len(cat) == 509
    assert sum(e for e, _ in flags) == 16
    assert sum(v for _, v in flags) == 8
    assert elapsed < 60 * 60


@criterion("table2-order14")
def test_table2_order14(store):
    rep = reproduce_table(2, 14, store, strict=True)
    assert rep.counts == {"nus3": 6, "rep_edge": 6, "rep_vertex": 4}
    assert rep.row_text() == "6, 6, 100, 4, 66.7"
    loose = reproduce_table(2, 14, store, strict=False)
    assert loose.counts == rep.counts


@criterion("table3-order14")
def test_table3_order14(store):
    rep = reproduce_table(3, 14, store, strict=True)
    assert rep.counts == {"nus3": 6, "nus3c": 6, "constructed": 4}
    assert rep.row_text() == "6, 6, 4, 66.7, 66.7"


@pytest.fixture(scope="module")
def store16():
    path = catalog16_path()
    if path is None:
        pytest.skip("no order-16 corpus supplied")
    return CatalogStore({16: str(path)})


@criterion("tables2-3-order16")
def test_tables_order16(store16):
    assert len(store16(16)) == 4060
    t2 = reproduce_table(2, 16, store16, strict=True)
    assert t2.counts == {"nus3": 83, "rep_edge": 77, "rep_vertex": 65}
    t3 = reproduce_table(3, 16, store16, strict=True)
    assert t3.counts == {"nus3": 83, "nus3c": 65, "constructed": 40}
    assert t3.row_text() == "83, 65, 40, 48.2, 61.5"


RIGHT_GRAPHS = [complete(4), prism(3), complete_bipartite(3, 3)]


def paired_composition_instances(kind):
    cat = generate_cubic(14)
    count = 0
    for cert in survey_certificates(cat, kind):
        back = cert.map.inverse()
        for h in RIGHT_GRAPHS:
            anchors = range(h.n) if kind == "vertex" else h.edges()
            for b in anchors:
                for f in stitch_maps(cert.g1, kind, cert.g1_anchor, h, b):
                    x1 = compose(CompositionSpec(kind, cert.g1, cert.g1_anchor, h, b, f))
                    x2 = compose(CompositionSpec(kind, cert.g2, cert.g2_anchor, h, b, back.then(f)))
                    assert char_poly(x1) == char_poly(x2)
                    count += 1
    return count


@criterion("vertex-composition-cospectral")
def test_vertex_composition_cospectral():
    assert paired_composition_instances("vertex") >= 200


@criterion("edge-composition-cospectral")
def test_edge_composition_cospectral():
    assert paired_composition_instances("edge") >= 200


@criterion("two-deletion-equivalence")
def test_two_deletion_equivalence():
    checked = 0
    for order in (4, 6, 8, 10):
        cat = generate_cubic(order)
        for c in partition_cospectral(cat):
            for i, j in itertools.combinations_with_replacement(c.members, 2):
                g1, g2 = cat[i], cat[j]
                for u, v in itertools.product(range(order), repeat=2):
                    nu, nv = g1.neighbors(u), g2.neighbors(v)
                    for image in itertools.permutations(nv):
                        f = dict(zip(nu, image))
                        assert removal_cospectral(g1, nu, g2, nv, f) == removal_cospectral_full(g1, nu, g2, nv, f)
                        f[u] = v
                        s, t = nu + (u,), nv + (v,)
                        assert removal_cospectral(g1, s, g2, t, f) == removal_cospectral_full(g1, s, g2, t, f)
                        checked += 2
    assert checked > 0


@criterion("closure-sweeps")
def test_closure_sweeps():
    for order in (12, 14):
        cat = generate_cubic(order)
        vc = survey_certificates(cat, "vertex")
        ec = survey_certificates(cat, "edge")
        assert vc and ec
        assert all(verify_lemma1(c) for c in vc)
        assert all(verify_lemma2(c) for c in ec)


@criterion("walk-generating-functions")
def test_walk_consistency():
    cat = generate_cubic(12)
    certs = survey_certificates(cat, "vertex") + survey_certificates(cat, "edge")
    assert certs
    for c in certs:
        depth = 2 * c.g1.n
        assert walks_match(c.g1, c.source_set(), c.g2, c.target_set(), c.map, depth)
        if c.kind == "vertex":
            s, t, f = lemma1_extension(c)
            assert walks_match(c.g1, s, c.g2, t, f, depth)


@criterion("char-poly-oracle")
def test_char_poly_oracle():
    for n in range(0, 6):
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
            assert char_poly(g) == char_poly_oracle(g)
    rng = random.Random(20240601)
    for _ in range(1000):
        n = rng.randint(6, 8)
        p = rng.random()
        g = Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])
        assert char_poly(g) == char_poly_oracle(g)
    for g in generate_cubic(14):
        c = char_poly(g).coeffs
        assert c[13] == 0 and c[12] == -g.num_edges()


@criterion("determinism-jobs")
def test_determinism(tmp_path, capsys):
    outputs = {}
    for jobs in (1, 2):
        texts = []
        for table in (1, 2, 3):
            out = tmp_path / f"t{table}-j{jobs}.json"
            flags = tmp_path / f"f{table}-j{jobs}.csv"
            code = main([
                "census", "--table", str(table), "--order", "14", "--format", "json",
                "--jobs", str(jobs), "--out", str(out), "--flags", str(flags),
            ])
            assert code == 0
            texts.append(out.read_bytes() + flags.read_bytes())
        outputs[jobs] = texts
    assert outputs[1] == outputs[2]
