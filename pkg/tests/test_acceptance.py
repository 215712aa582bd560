"""Exit criteria. Each criterion reports one PASS/FAIL line in the terminal summary."""

import io
import json
import random
import time
from collections import Counter
from fractions import Fraction

import pytest

from oracles import (
    adjacency,
    bfs_component,
    curvature_by_enumeration,
    five_cycles_by_walks,
    random_girth5_edges,
    random_measure,
    simple_cycles,
    wasserstein_by_enumeration,
)
from ricci_flat.catalog import catalog_all, cycle_graph, dodecahedral, path_graph, petersen, triplex
from ricci_flat.cli import run
from ricci_flat.graph_core import build_graph, girth
from ricci_flat.pentagon import (
    MISSING_OPPOSITE,
    all_five_cycles,
    edge_profile,
    edge_profiles,
    five_cycles_through,
    pentagon_embedding,
    verify_lemma1,
)
from ricci_flat.search import census, classify_ricci_flat
from ricci_flat.transport import Measure, kappa_alpha, lly_curvature, validate_certificate, wasserstein

K2 = build_graph(2, [(0, 1)])
NEGATIVE_CONTROLS = [
    ("C5", cycle_graph(5), (0, 1), Fraction(1, 2)),
    ("K2", K2, (0, 1), Fraction(2)),
    ("P3", path_graph(3), (0, 1), Fraction(1)),
]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def checked_catalog():
    return catalog_all(max_cycle=20, path_len=50)


# -- 1 -------------------------------------------------------------------------


@pytest.mark.criterion(1, "catalog flatness: kappa == 0 exactly on every checked edge, < 10 s")
def test_c1_verify_catalog_cli():
    start = time.perf_counter()
    code, out, _ = call("verify-catalog", "--format", "json")
    elapsed = time.perf_counter() - start
    doc = json.loads(out)
    assert code == 0 and doc["all_flat"]
    names = [f["name"] for f in doc["families"]]
    assert names == [f"cycle:{k}" for k in range(6, 21)] + ["path:50", "petersen", "dodecahedral", "half-dodecahedral", "triplex"]
    assert all(f["flat"] for f in doc["families"])
    assert elapsed < 10.0


@pytest.mark.criterion(1, "catalog flatness: kappa == 0 exactly on every checked edge, < 10 s")
def test_c1_every_edge_exactly_zero():
    for name, g, checked in checked_catalog():
        if name.startswith("path"):
            assert len(checked) == 47 and (0, 1) not in checked
        for x, y in checked:
            k = lly_curvature(g, x, y)
            assert isinstance(k, Fraction) and k == 0, (name, x, y, k)


# -- 2 -------------------------------------------------------------------------


@pytest.mark.criterion(2, "negative controls: C5 -> 1/2, K2 -> 2, P3 pendant -> 1; curvature exits 1")
@pytest.mark.parametrize("name, g, edge, expected", NEGATIVE_CONTROLS, ids=[c[0] for c in NEGATIVE_CONTROLS])
def test_c2_values(name, g, edge, expected):
    assert lly_curvature(g, *edge) == expected
    # independent exhaustive-flow oracle at both idleness values
    for alpha in (Fraction(1, 2), Fraction(2, 3)):
        assert curvature_by_enumeration(g, *edge, alpha) / (1 - alpha) == expected


@pytest.mark.criterion(2, "negative controls: C5 -> 1/2, K2 -> 2, P3 pendant -> 1; curvature exits 1")
@pytest.mark.parametrize("name, g, edge, expected", NEGATIVE_CONTROLS, ids=[c[0] for c in NEGATIVE_CONTROLS])
def test_c2_cli_witness(graph_file, name, g, edge, expected):
    code, out, _ = call("curvature", "--graph", graph_file(g), "--format", "json")
    assert code == 1
    witness = json.loads(out)["witness"]
    assert witness == {"edge": list(edge), "value": f"{expected.numerator}/{expected.denominator}"}


# -- 3 -------------------------------------------------------------------------


@pytest.mark.criterion(3, "two-point linearity: alpha=1/2 and alpha=2/3 quotients agree on every edge")
def test_c3_two_point_linearity():
    graphs = [(name, g) for name, g, _ in checked_catalog()] + [(n, g) for n, g, _, _ in NEGATIVE_CONTROLS]
    edges = 0
    for name, g in graphs:
        for x, y in g.edges():
            q1 = kappa_alpha(g, x, y, Fraction(1, 2)) / Fraction(1, 2)
            q2 = kappa_alpha(g, x, y, Fraction(2, 3)) / Fraction(1, 3)
            assert q1 == q2, (name, x, y, q1, q2)
            edges += 1
    assert edges == sum(g.m for _, g in graphs)


# -- 4 -------------------------------------------------------------------------


@pytest.mark.criterion(4, "OT oracle equivalence on >= 200 random instances; certificates validate")
def test_c4_oracle_equivalence():
    rng = random.Random(4)
    instances = 0
    while instances < 250:
        n = rng.randint(2, 12)
        g = build_graph(n, random_girth5_edges(n, rng, max_degree=rng.choice((3, 4))))
        assert girth(g) >= 5
        comp = bfs_component(adjacency(g), rng.randrange(n))
        mu = random_measure(rng, comp, max_support=5)
        nu = random_measure(rng, comp, max_support=5)
        assert len(mu) <= 5 and len(nu) <= 5
        w, cert = wasserstein(g, Measure(mu), Measure(nu))
        assert w == wasserstein_by_enumeration(g, mu, nu)
        assert validate_certificate(g, Measure(mu), Measure(nu), cert)
        instances += 1
    assert instances >= 200


# -- 5 -------------------------------------------------------------------------


@pytest.mark.criterion(5, "pentagon structure of Triplex, Petersen, dodecahedral; Lemma 1 holds; < 5 s")
def test_c5_pentagon_structure():
    start = time.perf_counter()
    t, p, d = triplex(), petersen(), dodecahedral()

    assert len(all_five_cycles(t)) == 9
    assert Counter(prof.c5_count for prof in edge_profiles(t)) == {3: 9, 2: 9}
    prof = edge_profile(t, 0, 1)  # edge (1,2) in 1-indexed labels
    assert prof.c5_count == 3 and prof.irregular and prof.has_opposite_pair
    pairs = {(a + 1, b + 1) for a, b in prof.occupied_pairs()}
    assert {(7, 3), (12, 10)} <= pairs
    i7, j3 = prof.x_nbrs.index(6) + 1, prof.y_nbrs.index(2) + 1
    assert prof.x_nbrs.index(11) + 1 == 3 - i7 and prof.y_nbrs.index(9) + 1 == 3 - j3
    assert len(five_cycles_through(t, 0, 6)) == 2  # chord (1,7)

    assert all(pr.c5_count == 4 for pr in edge_profiles(p))
    assert all(pr.c5_count == 2 for pr in edge_profiles(d))
    for g in (p, t, d):
        assert verify_lemma1(g).passed
    elapsed = time.perf_counter() - start

    # DFS / closed-walk oracles (not timed)
    assert len(five_cycles_by_walks(adjacency(t))) == 9
    assert len(five_cycles_by_walks(adjacency(p))) == 12
    dodeca_c5 = [c for c in simple_cycles(adjacency(d), max_len=5) if len(c) == 5]
    assert len(dodeca_c5) == 12
    assert elapsed < 5.0


# -- 6 -------------------------------------------------------------------------


@pytest.mark.criterion(6, "pentagon gluing: dodecahedral chi=2 (12 faces), Petersen chi=1 (6), Triplex fails; < 5 s")
def test_c6_embedding():
    start = time.perf_counter()
    rd = pentagon_embedding(dodecahedral())
    rp = pentagon_embedding(petersen())
    rt = pentagon_embedding(triplex())
    elapsed = time.perf_counter() - start
    assert rd.closed and len(rd.faces) == 12 and rd.euler_characteristic == 2
    assert rp.closed and len(rp.faces) == 6 and rp.euler_characteristic == 1
    for g, r in ((dodecahedral(), rd), (petersen(), rp)):
        per_edge = Counter(e for f in r.faces for e in f.edges())
        assert all(per_edge[e] == 2 for e in g.edges())
        assert r.euler_characteristic == g.n - g.m + len(r.faces)
    assert not rt.closed and rt.reason == MISSING_OPPOSITE
    assert edge_profile(triplex(), *rt.witness).irregular
    assert elapsed < 5.0


# -- 7 -------------------------------------------------------------------------


@pytest.mark.criterion(7, "census: cubic 1/2/9 at n=10/12/14 with {Petersen}/{Triplex}/{}; mixed n<=11; < 10 min")
def test_c7_classification():
    start = time.perf_counter()
    cubic = {n: census(n, 3, 3) for n in (10, 12, 14)}
    mixed = classify_ricci_flat(11, 2, 3)
    elapsed = time.perf_counter() - start

    assert {n: r.enumerated_count for n, r in cubic.items()} == {10: 1, 12: 2, 14: 9}
    assert cubic[10].families == ["petersen"]
    assert cubic[12].families == ["triplex"]
    assert cubic[14].families == []

    found = sorted(name for r in mixed for name in r.families)
    assert found == sorted([f"cycle:{k}" for k in range(6, 12)] + ["petersen"])
    assert all(r.matches_expectation for r in mixed)
    assert elapsed < 600.0


@pytest.mark.criterion(7, "census: cubic 1/2/9 at n=10/12/14 with {Petersen}/{Triplex}/{}; mixed n<=11; < 10 min")
def test_c7_worker_independence():
    for workers in (2, 3):
        parallel = census(14, 3, 3, workers=workers)
        assert parallel.to_json() == census(14, 3, 3, workers=1).to_json()
    assert [r.to_json() for r in classify_ricci_flat(11, 2, 3, workers=4)] == [
        r.to_json() for r in classify_ricci_flat(11, 2, 3, workers=1)
    ]


# -- 8 -------------------------------------------------------------------------


@pytest.mark.criterion(8, "byte-identical JSON across repeated runs of every subcommand")
def test_c8_reproducibility(graph_file, tmp_path):
    tri = graph_file(triplex(), "triplex.txt")
    c5 = graph_file(cycle_graph(5), "c5.txt")
    commands = [
        ["gen", "--family", "triplex"],
        ["curvature", "--graph", c5, "--format", "json"],
        ["curvature", "--graph", tri, "--alpha", "2/3", "--format", "json"],
        ["verify-catalog", "--format", "json"],
        ["structure", "--graph", tri, "--embed", "--format", "json"],
        ["search", "--max-n", "12", "--format", "json"],
    ]
    for argv in commands:
        first, second = call(*argv), call(*argv)
        assert first == second
        if "json" in argv:
            assert json.dumps(json.loads(first[1]), indent=2, ensure_ascii=False) + "\n" == first[1]
    out1, out2 = tmp_path / "a.txt", tmp_path / "b.txt"
    call("search", "--max-n", "12", "--out", str(out1))
    call("search", "--max-n", "12", "--out", str(out2), "--workers", "2")
    assert out1.read_bytes() == out2.read_bytes()
