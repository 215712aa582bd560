import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_graph_classes, random_girth5_edges
from ricci_flat.catalog import cycle_graph, path_graph, petersen, triplex
from ricci_flat.errors import InvalidSpec, LimitExceeded
from ricci_flat.graph_core import build_graph, girth, is_connected
from ricci_flat.search import (
    canonical_form,
    canonical_labeling,
    classify_ricci_flat,
    enumerate_forms,
    enumerate_graphs,
    expected_families,
    format_census,
    graph_from_canonical,
    lemma1_prefilter,
    workers_from_env,
)
from ricci_flat.transport import is_ricci_flat


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_canonical_petersen_permuted():
    rng = random.Random(1)
    for _ in range(10):
        assert canonical_form(shuffled(petersen(), rng)) == canonical_form(petersen())


def test_canonical_distinguishes():
    assert canonical_form(petersen()) != canonical_form(triplex())
    assert canonical_form(cycle_graph(5)) != canonical_form(path_graph(5))


def test_canonical_labeling_is_permutation():
    perm, _ = canonical_labeling(triplex())
    assert sorted(perm) == list(range(12))
    assert graph_from_canonical(canonical_form(triplex())) == triplex().relabel(perm)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=10), st.integers(min_value=0, max_value=10**6))
def test_canonical_form_iff_isomorphic(n, seed):
    rng = random.Random(seed)
    p = rng.choice((0.2, 0.35, 0.5))
    a = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    b = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    assert canonical_form(shuffled(a, rng)) == canonical_form(a)
    assert (canonical_form(a) == canonical_form(b)) == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_canonical_regular_graphs():
    # pairs of non-isomorphic regular graphs where degree refinement alone is useless
    hexagons = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert canonical_form(hexagons) != canonical_form(cycle_graph(6))
    graphs = list(enumerate_graphs(14, 3, 3))
    forms = {canonical_form(shuffled(g, random.Random(3))) for g in graphs}
    assert len(forms) == 9


@pytest.mark.parametrize(
    "args, count",
    [((10, 3, 3, 5), 1), ((12, 3, 3, 5), 2), ((8, 3, 3, 5), 0), ((9, 3, 3, 5), 0), ((5, 2, 2, 5), 1)],
)
def test_enumerate_counts(args, count):
    assert len(list(enumerate_graphs(*args))) == count


def test_enumerate_petersen_triplex():
    (g,) = enumerate_graphs(10, 3, 3, 5)
    assert nx.is_isomorphic(to_nx(g), to_nx(petersen()))
    graphs = list(enumerate_graphs(12, 3, 3, 5))
    assert sum(nx.is_isomorphic(to_nx(g), to_nx(triplex())) for g in graphs) == 1
    (c5,) = enumerate_graphs(5, 2, 2, 5)
    assert canonical_form(c5) == canonical_form(cycle_graph(5))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_enumerate_matches_brute_force(n):
    ours = list(enumerate_graphs(n, 2, 3))
    brute = brute_force_graph_classes(n, 2, 3)
    assert len(ours) == len(brute)
    for h in brute:
        assert sum(nx.is_isomorphic(to_nx(g), h) for g in ours) == 1


def test_enumerate_mixed_frozen_counts():
    # n=5..8 frozen from the brute-force oracle above (1, 1, 2, 5 classes)
    assert [len(enumerate_forms(n, 2, 3)) for n in range(5, 9)] == [1, 1, 2, 5]


@pytest.mark.parametrize("args", [(11, 2, 3), (12, 3, 3), (10, 2, 2)])
def test_emitted_graphs_satisfy_constraints(args):
    n, lo, hi = args
    forms = enumerate_forms(n, lo, hi)
    assert forms == sorted(set(forms))
    for form in forms:
        g = graph_from_canonical(form)
        assert is_connected(g) and girth(g) >= 5
        assert lo <= min(g.degrees()) and max(g.degrees()) <= hi
        # permute then re-canonicalize is idempotent
        assert canonical_form(shuffled(g, random.Random(form[-1]))) == form


def test_enumerate_errors():
    with pytest.raises(LimitExceeded):
        list(enumerate_graphs(17, 3, 3))
    with pytest.raises(InvalidSpec):
        list(enumerate_graphs(10, 1, 3))
    with pytest.raises(InvalidSpec):
        list(enumerate_graphs(10, 3, 4))
    with pytest.raises(InvalidSpec):
        list(enumerate_graphs(10, 3, 3, 4))


def test_prefilter_soundness():
    for n in range(5, 11):
        for form in enumerate_forms(n, 2, 3):
            g = graph_from_canonical(form)
            if not lemma1_prefilter(g):
                assert not is_ricci_flat(g)


def test_worker_determinism():
    assert enumerate_forms(12, 2, 3, workers=1) == enumerate_forms(12, 2, 3, workers=3)
    assert enumerate_forms(14, 3, 3, workers=2) == enumerate_forms(14, 3, 3, workers=1)


def test_expected_families():
    assert expected_families(10, 2, 3) == ["cycle:10", "petersen"]
    assert expected_families(12, 3, 3) == ["triplex"]
    assert expected_families(15, 2, 3) == ["cycle:15", "half-dodecahedral"]
    assert expected_families(5, 2, 3) == []


def test_census_format():
    records = classify_ricci_flat(10, 3, 3, min_n=10)
    text = format_census(records)
    lines = text.splitlines()
    assert lines[0].startswith("# n=10 ") and "enumerated_count=1" in lines[0]
    assert lines[1].split(" ")[:2] == ["10", "15"]
    assert len(lines[1].split(" ")) == 2 + 30


def test_workers_env(monkeypatch):
    monkeypatch.delenv("RICCI_WORKERS", raising=False)
    assert workers_from_env() == 1
    monkeypatch.setenv("RICCI_WORKERS", "3")
    assert workers_from_env() == 3
    monkeypatch.setenv("RICCI_WORKERS", "zero")
    with pytest.raises(InvalidSpec):
        workers_from_env()


@pytest.mark.slow
def test_cubic_16_census():
    # published count of cubic graphs of girth >= 5 on 16 vertices
    assert len(enumerate_forms(16, 3, 3, workers=4)) == 49
