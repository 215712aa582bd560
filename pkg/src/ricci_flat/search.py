"""Isomorph-free enumeration of small girth >= 5 graphs and the Ricci-flat census.

Graphs are generated in breadth-first label order: vertex ``v`` is
processed after ``0..v-1`` and, at that moment, picks all of its remaining
neighbors among already-labeled unprocessed vertices and freshly labeled
ones. Every connected graph arises this way (any BFS ordering of it), so
deduplicating the leaves by canonical form yields one representative per
isomorphism class.
"""

from __future__ import annotations

import os
import struct
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .catalog import NAMED, FamilySpec, cycle_graph, make_family
from .errors import InvalidSpec, LimitExceeded
from .graph_core import Graph, build_graph, format_edge_line
from .pentagon import edge_profile
from .transport import is_ricci_flat

__all__ = [
    "DEFAULT_LIMIT",
    "UNKNOWN",
    "CensusRecord",
    "canonical_form",
    "canonical_labeling",
    "graph_from_canonical",
    "enumerate_graphs",
    "lemma1_prefilter",
    "census",
    "enumerate_forms",
    "classify_ricci_flat",
    "expected_families",
    "format_census",
    "workers_from_env",
]

DEFAULT_LIMIT = 16
UNKNOWN = "UNKNOWN"


# -- canonical labeling ---------------------------------------------------------


def _refine(adj, cells):
    """Coarsest equitable refinement of an ordered partition.

    Cells split by the sorted multiset of neighbor cell indices; the order of
    the pieces depends only on those signatures, so the result commutes with
    relabeling.
    """
    n = len(adj)
    color = [0] * n
    while True:
        for idx, cell in enumerate(cells):
            for v in cell:
                color[v] = idx
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(sorted(color[w] for w in adj[v]))
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _orbit_reps(candidates, autos, fixed):
    """Representatives of ``candidates`` under automorphisms fixing ``fixed``."""
    stab = [a for a in autos if all(a[u] == u for u in fixed)]
    if not stab:
        return list(candidates)
    parent = {v: v for v in candidates}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in stab:
        for v in candidates:
            w = a[v]
            if w in parent:
                rv, rw = find(v), find(w)
                if rv != rw:
                    parent[max(rv, rw)] = min(rv, rw)
    return [v for v in candidates if find(v) == v]


def canonical_labeling(g: Graph) -> tuple[list[int], tuple]:
    """Return ``(perm, key)``: ``perm[v]`` is the canonical label of ``v``.

    Individualization-refinement over the degree partition; the leaf with the
    smallest sorted relabeled edge list wins. Automorphisms discovered at equal
    leaves prune sibling branches in the same orbit of the current pointwise
    stabilizer.
    """
    adj = g.adjacency
    n = g.n
    edges = list(g.edges())
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(len(adj[v]), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]

    best_key = None
    best_perm = None
    autos: list[list[int]] = []

    def leaf(cells):
        nonlocal best_key, best_perm
        perm = [0] * n
        for idx, cell in enumerate(cells):
            perm[cell[0]] = idx
        key = tuple(sorted((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u]) for u, v in edges))
        if best_key is None or key < best_key:
            best_key, best_perm = key, perm
        elif key == best_key:
            inv = [0] * n
            for v, p in enumerate(best_perm):
                inv[p] = v
            autos.append([inv[perm[v]] for v in range(n)])

    def search(cells, fixed):
        cells = _refine(adj, cells)
        if len(cells) == n:
            leaf(cells)
            return
        target = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        cell = sorted(cells[target])
        explored = []
        for v in cell:
            if explored and v not in _orbit_reps(explored + [v], autos, fixed):
                continue
            explored.append(v)
            rest = [w for w in cells[target] if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :], fixed + [v])

    if n == 0:
        return [], ()
    search(start, [])
    return best_perm, best_key


def canonical_form(g: Graph) -> bytes:
    """Relabel-invariant byte key: equal iff the graphs are isomorphic.

    Layout: big-endian 16-bit ``n``, ``m``, then the canonically relabeled
    sorted edge list; byte order agrees with numeric order.
    """
    _, key = canonical_labeling(g)
    flat = [g.n, g.m]
    for u, v in key:
        flat += [u, v]
    return struct.pack(f">{len(flat)}H", *flat)


def graph_from_canonical(form: bytes) -> Graph:
    values = struct.unpack(f">{len(form) // 2}H", form)
    n, m = values[0], values[1]
    flat = values[2:]
    return build_graph(n, list(zip(flat[::2], flat[1::2])))


# -- enumeration ------------------------------------------------------------------


def _within(adj, a, b, radius):
    """True if ``b`` is within ``radius`` hops of ``a``."""
    if a == b:
        return True
    seen = {a}
    frontier = [a]
    for _ in range(radius):
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w == b:
                    return True
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return False


def _distance_profile(adj, root):
    dist = {root: 0}
    queue = deque([root])
    counts = []
    while queue:
        u = queue.popleft()
        d = dist[u]
        if d == len(counts):
            counts.append(0)
        counts[d] += 1
        for w in adj[u]:
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return counts


def _vertex_invariant(adj, v):
    return (-len(adj[v]), _distance_profile(adj, v), sorted(len(adj[w]) for w in adj[v]))


@dataclass(frozen=True)
class _Params:
    n: int
    min_degree: int
    max_degree: int
    min_girth: int


def _expand(params, adj, v, nxt):
    """Yield ``(adj, nxt)`` for every way vertex ``v`` can finish its degree."""
    n = params.n
    cur = len(adj[v])
    top = params.max_degree if v == 0 else min(params.max_degree, len(adj[0]))
    existing = [w for w in range(v + 1, nxt) if len(adj[w]) < params.max_degree]
    for target in range(top, max(params.min_degree, cur, 1) - 1, -1):
        need = target - cur
        for k_old in range(min(need, len(existing)), -1, -1):
            k_new = need - k_old
            if nxt + k_new > n:
                continue
            for chosen in combinations(existing, k_old):
                trial = [list(a) for a in adj]
                ok = True
                for w in chosen:
                    # a new edge vw closes a cycle of length d(v, w) + 1
                    if _within(trial, v, w, params.min_girth - 2):
                        ok = False
                        break
                    trial[v].append(w)
                    trial[w].append(v)
                if not ok:
                    continue
                for t in range(nxt, nxt + k_new):
                    trial[v].append(t)
                    trial[t].append(v)
                yield trial, nxt + k_new


def _dfs(params, adj, v, nxt, out):
    n = params.n
    if v == n:
        _accept(params, adj, out)
        return
    if v >= nxt:
        return  # component closed before all vertices were reached
    for trial, nn in _expand(params, adj, v, nxt):
        _dfs(params, trial, v + 1, nn, out)


def _accept(params, adj, out):
    inv0 = _vertex_invariant(adj, 0)
    if any(_vertex_invariant(adj, v) < inv0 for v in range(1, params.n)):
        return
    g = Graph([sorted(a) for a in adj])
    out.add(canonical_form(g))


def _initial_states(params, min_states):
    """Disjoint top-level prefixes of the search tree.

    Vertices are processed breadth-first until at least ``min_states``
    partial states exist (or the tree is exhausted).
    """
    n = params.n
    states = [([[] for _ in range(n)], 0, 1)]  # (adj, next vertex, next label)
    for _ in range(n):
        if len(states) >= min_states:
            break
        nxt_states = []
        for adj, v, nxt in states:
            if v == n or v >= nxt:
                nxt_states.append((adj, v, nxt))
                continue
            for trial, nn in _expand(params, adj, v, nxt):
                nxt_states.append((trial, v + 1, nn))
        states = nxt_states
    return states


def _run_states(params, states):
    out: set[bytes] = set()
    for adj, v, nxt in states:
        _dfs(params, adj, v, nxt, out)
    return out


def _check_enum_args(n, min_degree, max_degree, min_girth, limit):
    if n > limit:
        raise LimitExceeded(f"n={n} exceeds the limit {limit}")
    if n < 1:
        raise InvalidSpec("n must be positive")
    if not 2 <= min_degree <= max_degree <= 3:
        raise InvalidSpec("degree bounds must satisfy 2 <= min <= max <= 3")
    if min_girth < 5:
        raise InvalidSpec("min_girth must be at least 5")


def enumerate_forms(n, min_degree=2, max_degree=3, min_girth=5, workers=1, limit=DEFAULT_LIMIT) -> list[bytes]:
    """Sorted canonical forms of all admissible connected graphs on ``n`` vertices."""
    _check_enum_args(n, min_degree, max_degree, min_girth, limit)
    params = _Params(n, min_degree, max_degree, min_girth)
    if workers <= 1:
        return sorted(_run_states(params, _initial_states(params, 1)))
    states = _initial_states(params, 8 * workers)
    if len(states) <= 1:
        forms = _run_states(params, states)
    else:
        chunks = [states[i::workers] for i in range(workers)]
        forms = set()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_states, [params] * workers, chunks):
                forms |= part
    return sorted(forms)


def enumerate_graphs(n, min_degree=2, max_degree=3, min_girth=5, workers=1, limit=DEFAULT_LIMIT):
    """Yield one canonically labeled graph per isomorphism class.

    Connected graphs on ``n`` vertices with degrees in
    ``[min_degree, max_degree]`` and girth at least ``min_girth``, ordered by
    canonical form. Raises :class:`LimitExceeded` for ``n > limit``.
    """
    for form in enumerate_forms(n, min_degree, max_degree, min_girth, workers, limit):
        yield graph_from_canonical(form)


# -- classification -----------------------------------------------------------------


def lemma1_prefilter(g: Graph) -> bool:
    """False if some edge between degree-3 vertices lacks an opposite pentagon pair.

    Such an edge cannot be flat in a girth >= 5 graph, so the graph can be
    rejected without solving any transport problem.
    """
    for x, y in g.edges():
        if g.degree(x) == 3 and g.degree(y) == 3 and not edge_profile(g, x, y).has_opposite_pair:
            return False
    return True


def _family_table(n):
    table = {}
    if n >= 3:
        table[canonical_form(cycle_graph(n))] = f"cycle:{n}"
    for name in NAMED:
        g = make_family(FamilySpec(name))
        if g.n == n:
            table[canonical_form(g)] = name
    return table


def expected_families(n, min_degree, max_degree) -> list[str]:
    """Members of the classification on ``n`` vertices admitted by the degree bounds."""
    names = []
    if n >= 6 and min_degree <= 2 <= max_degree:
        names.append(f"cycle:{n}")
    for name in NAMED:
        g = make_family(FamilySpec(name))
        degs = g.degrees()
        if g.n == n and min(degs) >= min_degree and max(degs) <= max_degree:
            names.append(name)
    return sorted(names)


@dataclass
class CensusRecord:
    n: int
    min_degree: int
    max_degree: int
    min_girth: int
    connected: bool
    enumerated_count: int
    ricci_flat: list[tuple[bytes, str]] = field(default_factory=list)
    prefiltered: int = 0

    @property
    def families(self) -> list[str]:
        return sorted(name for _, name in self.ricci_flat)

    @property
    def matches_expectation(self) -> bool:
        return self.families == expected_families(self.n, self.min_degree, self.max_degree)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "constraints": {
                "min_degree": self.min_degree,
                "max_degree": self.max_degree,
                "min_girth": self.min_girth,
                "connected": self.connected,
            },
            "enumerated_count": self.enumerated_count,
            "prefiltered": self.prefiltered,
            "ricci_flat": [
                {"graph": format_edge_line(graph_from_canonical(f)), "family": name} for f, name in self.ricci_flat
            ],
            "expected": expected_families(self.n, self.min_degree, self.max_degree),
            "match": self.matches_expectation,
        }


def census(n, min_degree=2, max_degree=3, min_girth=5, workers=1, limit=DEFAULT_LIMIT) -> CensusRecord:
    forms = enumerate_forms(n, min_degree, max_degree, min_girth, workers, limit)
    table = _family_table(n)
    record = CensusRecord(n, min_degree, max_degree, min_girth, True, len(forms))
    for form in forms:
        g = graph_from_canonical(form)
        if not lemma1_prefilter(g):
            record.prefiltered += 1
            continue
        if is_ricci_flat(g):
            record.ricci_flat.append((form, table.get(form, UNKNOWN)))
    return record


def classify_ricci_flat(max_n, min_degree=2, max_degree=3, workers=1, limit=DEFAULT_LIMIT, min_n=1) -> list[CensusRecord]:
    """Census records for every ``n`` in ``[min_n, max_n]``."""
    if max_n > limit:
        raise LimitExceeded(f"max_n={max_n} exceeds the limit {limit}")
    if max_n < 1:
        raise InvalidSpec("max_n must be positive")
    return [census(n, min_degree, max_degree, 5, workers, limit) for n in range(min_n, max_n + 1)]


def format_census(records) -> str:
    """Census file text: a ``#`` header per ``n`` then one edge line per flat graph."""
    lines = []
    for r in records:
        lines.append(
            f"# n={r.n} min_degree={r.min_degree} max_degree={r.max_degree} "
            f"min_girth={r.min_girth} enumerated_count={r.enumerated_count} ricci_flat={len(r.ricci_flat)}"
        )
        lines.extend(format_edge_line(graph_from_canonical(f)) for f, _ in r.ricci_flat)
    return "\n".join(lines) + "\n"


def workers_from_env(default=1) -> int:
    raw = os.environ.get("RICCI_WORKERS")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidSpec(f"RICCI_WORKERS must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidSpec("RICCI_WORKERS must be at least 1")
    return value
