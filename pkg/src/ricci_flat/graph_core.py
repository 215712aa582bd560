"""Immutable simple graphs on dense vertex ids, with BFS utilities and I/O.

Vertices are the integers ``0..n-1``. A :class:`Graph` is never mutated;
derived graphs are built with :func:`build_graph` or :meth:`Graph.relabel`.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator, Sequence

from .errors import DuplicateEdge, GraphFormatError, SelfLoop, VertexOutOfRange

__all__ = [
    "ACYCLIC",
    "UNREACHABLE",
    "Graph",
    "build_graph",
    "bfs_distances",
    "girth",
    "is_connected",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
    "write_edge_list",
    "parse_edge_line",
    "format_edge_line",
]

#: Girth of a forest. Compares greater than every integer, so
#: ``girth(g) >= 5`` holds for acyclic graphs.
ACYCLIC = math.inf

#: Distance marker for vertices outside the source's component.
UNREACHABLE = None


class Graph:
    """A simple undirected graph with sorted adjacency tuples."""

    __slots__ = ("_adj", "_sets", "_m")

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        # Trusted constructor; use build_graph for validated input.
        self._adj = tuple(tuple(a) for a in adjacency)
        self._sets = tuple(frozenset(a) for a in self._adj)
        self._m = sum(len(a) for a in self._adj) // 2

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise VertexOutOfRange(v, self.n)

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and build the graph.

    Raises :class:`SelfLoop`, :class:`DuplicateEdge` or
    :class:`VertexOutOfRange`. Input edge order does not matter.
    """
    if n < 0:
        raise VertexOutOfRange(n, n)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        for w in (u, v):
            if not (isinstance(w, int) and 0 <= w < n):
                raise VertexOutOfRange(w, n)
        if u == v:
            raise SelfLoop(u)
        if v in adj[u]:
            raise DuplicateEdge(u, v)
        adj[u].add(v)
        adj[v].add(u)
    return Graph([sorted(a) for a in adj])


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Hop distances from ``source``; ``UNREACHABLE`` outside its component."""
    g.check_vertex(source)
    dist: list[int | None] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return dist


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ``ACYCLIC`` for a forest.

    A BFS from every root; a non-tree edge ``(u, w)`` seen from root ``r``
    closes a closed walk of length ``d(u) + d(w) + 1`` containing a cycle no
    longer than that, and the minimum over all roots is attained exactly.
    """
    best = ACYCLIC
    adj = g.adjacency
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            # A cycle first seen from depth du has length >= 2*du.
            if 2 * du >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, du + dist[w] + 1)
    return best


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


# -- edge-list text format ---------------------------------------------------


def _parse_ints(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split(" ")
    if len(parts) != count:
        raise GraphFormatError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: not an integer in {line!r}") from None
    if any(v < 0 for v in values) or any(not p.isdigit() for p in parts):
        raise GraphFormatError(f"line {lineno}: expected nonnegative integers in {line!r}")
    return values


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v`` pairs.

    Lines starting with ``#`` are comments; blank lines are ignored.
    Structural problems surface as :class:`GraphFormatError` or one of the
    :func:`build_graph` errors.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise GraphFormatError("missing 'n m' header")
    lineno, header = rows[0]
    n, m = _parse_ints(header, 2, lineno)
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}")
    edges = [tuple(_parse_ints(line, 2, ln)) for ln, line in body]
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))


def format_edge_line(g: Graph) -> str:
    """One-line form ``n m u1 v1 u2 v2 ...`` (no trailing newline)."""
    parts = [str(g.n), str(g.m)]
    for u, v in g.edges():
        parts += [str(u), str(v)]
    return " ".join(parts)


def parse_edge_line(line: str) -> Graph:
    tokens = line.strip().split(" ")
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"not an edge line: {line!r}") from None
    if len(values) < 2 or len(values) != 2 + 2 * values[1]:
        raise GraphFormatError(f"edge count mismatch in {line!r}")
    flat = values[2:]
    return build_graph(values[0], list(zip(flat[::2], flat[1::2])))
