"""Pentagons through edges, opposite pairs, irregular edges, pentagon gluing.

For an edge ``xy`` in a graph of girth at least five, every 5-cycle through
``xy`` is fixed by the 3-path ``x_i x y y_j`` it uses, where ``x_1 < x_2`` are
the other neighbors of ``x`` and ``y_1 < y_2`` those of ``y``. The four
*slots* ``(i, j)`` therefore hold at most one pentagon each. Two pentagons are
opposite when they occupy slots ``(i, j)`` and ``(3-i, 3-j)``; an edge is
irregular when exactly three slots are filled.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import DegreeTooLarge, GirthTooSmall, NotAnEdge, PreconditionViolated
from .graph_core import Graph, girth, is_connected
from .transport import lly_curvature

__all__ = [
    "FiveCycle",
    "EdgeProfile",
    "Lemma1Report",
    "EmbeddingResult",
    "NO_STARTING_C5",
    "MISSING_OPPOSITE",
    "EDGE_OVERSATURATED",
    "five_cycles_through",
    "all_five_cycles",
    "edge_profile",
    "edge_profiles",
    "verify_lemma1",
    "pentagon_embedding",
]

NO_STARTING_C5 = "NO_STARTING_C5"
MISSING_OPPOSITE = "MISSING_OPPOSITE"
EDGE_OVERSATURATED = "EDGE_OVERSATURATED"

SLOTS = ((1, 1), (1, 2), (2, 1), (2, 2))


class FiveCycle(tuple):
    """A 5-cycle stored as its lexicographically least rotation/reflection."""

    __slots__ = ()

    def __new__(cls, vertices: Sequence[int]):
        seq = tuple(vertices)
        if len(seq) != 5 or len(set(seq)) != 5:
            raise ValueError(f"not five distinct vertices: {seq}")
        k = len(seq)
        variants = []
        for s in (seq, seq[::-1]):
            variants.extend(s[i:] + s[:i] for i in range(k))
        return super().__new__(cls, min(variants))

    def edges(self) -> list[tuple[int, int]]:
        return [tuple(sorted((self[i], self[(i + 1) % 5]))) for i in range(5)]

    def is_cycle_in(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.edges())

    def neighbors_in_cycle(self, v: int) -> tuple[int, int]:
        i = self.index(v)
        return self[i - 1], self[(i + 1) % 5]


def _edge_key(x, y):
    return (x, y) if x < y else (y, x)


def _require_edge(g, x, y):
    g.check_vertex(x)
    g.check_vertex(y)
    if not g.has_edge(x, y):
        raise NotAnEdge(x, y)


def five_cycles_through(g: Graph, x: int, y: int) -> list[FiveCycle]:
    """All simple 5-cycles containing the edge ``xy``, sorted."""
    _require_edge(g, x, y)
    found = set()
    for p in g.neighbors(y):
        if p == x:
            continue
        for r in g.neighbors(x):
            if r == y or r == p:
                continue
            for q in g.neighbors(p):
                if q in (x, y, r) or not g.has_edge(q, r):
                    continue
                found.add(FiveCycle((x, y, p, q, r)))
    return sorted(found)


def all_five_cycles(g: Graph) -> list[FiveCycle]:
    found = set()
    for x, y in g.edges():
        found.update(five_cycles_through(g, x, y))
    return sorted(found)


@dataclass(frozen=True)
class EdgeProfile:
    """Pentagon slots at one edge.

    ``x_nbrs``/``y_nbrs`` are the other neighbors of each endpoint in
    ascending order; ``slots[(i, j)]`` is the pentagon through
    ``x_nbrs[i-1], x, y, y_nbrs[j-1]`` or ``None``.
    """

    edge: tuple[int, int]
    x_nbrs: tuple[int, ...]
    y_nbrs: tuple[int, ...]
    slots: dict[tuple[int, int], FiveCycle | None]
    cycles: tuple[FiveCycle, ...]

    @property
    def c5_count(self) -> int:
        return len(self.cycles)

    @property
    def irregular(self) -> bool:
        return self.c5_count == 3

    @property
    def has_opposite_pair(self) -> bool:
        s = self.slots
        return bool((s[1, 1] and s[2, 2]) or (s[1, 2] and s[2, 1]))

    def slot_of(self, cycle: FiveCycle) -> tuple[int, int]:
        x, y = self.edge
        a, b = cycle.neighbors_in_cycle(x)
        r = b if a == y else a
        a, b = cycle.neighbors_in_cycle(y)
        p = b if a == x else a
        return self.x_nbrs.index(r) + 1, self.y_nbrs.index(p) + 1

    def occupied_pairs(self) -> list[tuple[int, int]]:
        """Occupied slots as ``(x-side neighbor, y-side neighbor)`` pairs."""
        return [(self.x_nbrs[i - 1], self.y_nbrs[j - 1]) for (i, j) in SLOTS if self.slots[i, j]]

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge),
            "c5_count": self.c5_count,
            "irregular": self.irregular,
            "opposite_pair": self.has_opposite_pair,
            "cycles": [list(c) for c in self.cycles],
        }


def edge_profile(g: Graph, x: int, y: int) -> EdgeProfile:
    _require_edge(g, x, y)
    for v in (x, y):
        if g.degree(v) > 3:
            raise DegreeTooLarge(f"vertex {v} has degree {g.degree(v)} > 3")
    x_nbrs = tuple(v for v in g.neighbors(x) if v != y)
    y_nbrs = tuple(v for v in g.neighbors(y) if v != x)
    cycles = tuple(five_cycles_through(g, x, y))
    slots: dict[tuple[int, int], FiveCycle | None] = dict.fromkeys(SLOTS)
    profile = EdgeProfile((x, y), x_nbrs, y_nbrs, slots, cycles)
    for c in cycles:
        # with girth >= 5 at most one pentagon per slot; keep the first otherwise
        key = profile.slot_of(c)
        if slots[key] is None:
            slots[key] = c
    return profile


def edge_profiles(g: Graph) -> list[EdgeProfile]:
    return [edge_profile(g, x, y) for x, y in g.edges()]


@dataclass(frozen=True)
class Lemma1Report:
    checked: int
    violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "checked": self.checked,
            "violations": [list(e) for e in self.violations],
        }


def verify_lemma1(g: Graph) -> Lemma1Report:
    """Every flat edge between two degree-3 vertices has an opposite pair."""
    if girth(g) < 5:
        raise GirthTooSmall(f"girth {girth(g)} < 5")
    checked = 0
    violations = []
    for x, y in g.edges():
        if g.degree(x) != 3 or g.degree(y) != 3:
            continue
        if lly_curvature(g, x, y) != 0:
            continue
        checked += 1
        if not edge_profile(g, x, y).has_opposite_pair:
            violations.append((x, y))
    return Lemma1Report(checked, violations)


@dataclass(frozen=True)
class EmbeddingResult:
    closed: bool
    faces: tuple[FiveCycle, ...] = ()
    euler_characteristic: int | None = None
    witness: tuple[int, int] | None = None
    reason: str | None = None

    def to_json(self) -> dict:
        if self.closed:
            return {
                "closed": True,
                "faces": [list(f) for f in self.faces],
                "euler_characteristic": self.euler_characteristic,
            }
        return {
            "closed": False,
            "witness": list(self.witness) if self.witness else None,
            "reason": self.reason,
        }


def pentagon_embedding(g: Graph, strict: bool = True) -> EmbeddingResult:
    """Glue pentagonal faces onto ``g`` until every edge borders two faces.

    Seeds with the smallest pentagon; each boundary edge (FIFO order) receives
    the pentagon opposite to the face already on it. ``strict=False`` drops
    the 3-regularity precondition (degrees must still be at most 3).
    """
    if girth(g) < 5:
        raise PreconditionViolated("girth must be at least 5")
    if not is_connected(g):
        raise PreconditionViolated("graph must be connected")
    degs = set(g.degrees())
    if strict and degs != {3}:
        raise PreconditionViolated("graph must be 3-regular")
    if degs and max(degs) > 3:
        raise PreconditionViolated("degrees must be at most 3")

    cycles = all_five_cycles(g)
    if not cycles:
        edges = list(g.edges())
        return EmbeddingResult(False, witness=edges[0] if edges else None, reason=NO_STARTING_C5)

    faces: list[FiveCycle] = []
    on_edge: dict[tuple[int, int], list[FiveCycle]] = {e: [] for e in g.edges()}
    queue: deque[tuple[int, int]] = deque()
    profiles: dict[tuple[int, int], EdgeProfile] = {}

    def glue(face):
        for e in face.edges():
            if len(on_edge[e]) >= 2:
                return e
        faces.append(face)
        for e in face.edges():
            on_edge[e].append(face)
            if len(on_edge[e]) == 1:
                queue.append(e)
        return None

    glue(cycles[0])
    while queue:
        e = queue.popleft()
        if len(on_edge[e]) != 1:
            continue
        if e not in profiles:
            profiles[e] = edge_profile(g, *e)
        prof = profiles[e]
        i, j = prof.slot_of(on_edge[e][0])
        opposite = prof.slots.get((3 - i, 3 - j))
        if opposite is None:
            return EmbeddingResult(False, witness=e, reason=MISSING_OPPOSITE)
        bad = glue(opposite)
        if bad is not None:
            return EmbeddingResult(False, witness=bad, reason=EDGE_OVERSATURATED)

    for e, fs in on_edge.items():
        if len(fs) != 2:
            return EmbeddingResult(False, witness=e, reason=EDGE_OVERSATURATED)
    chi = g.n - g.m + len(faces)
    return EmbeddingResult(True, faces=tuple(faces), euler_characteristic=chi)
