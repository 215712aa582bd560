"""Constructors for the Ricci-flat girth-five families and their relatives.

Family names accepted by :func:`parse_family` (and the ``gen`` command)::

    path:K  cycle:K  petersen  dodecahedral  half-dodecahedral  triplex  gp:K,T
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpec
from .graph_core import Graph, build_graph

__all__ = [
    "FamilySpec",
    "TRIPLEX_CHORDS",
    "make_family",
    "parse_family",
    "catalog_all",
    "path_graph",
    "cycle_graph",
    "generalized_petersen",
    "petersen",
    "dodecahedral",
    "half_dodecahedral",
    "triplex",
]

PATH = "path"
CYCLE = "cycle"
PETERSEN = "petersen"
DODECAHEDRAL = "dodecahedral"
HALF_DODECAHEDRAL = "half-dodecahedral"
TRIPLEX = "triplex"
GENERALIZED_PETERSEN = "gp"

NAMED = (PETERSEN, DODECAHEDRAL, HALF_DODECAHEDRAL, TRIPLEX)

# 1-indexed positions on the 12-cycle
TRIPLEX_CHORDS = ((1, 7), (2, 10), (3, 8), (4, 12), (5, 9), (6, 11))


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        f, p = self.family, self.params
        if f == PATH:
            ok = len(p) == 1 and p[0] >= 2
        elif f == CYCLE:
            ok = len(p) == 1 and p[0] >= 3
        elif f == GENERALIZED_PETERSEN:
            ok = len(p) == 2 and p[0] >= 3 and 1 <= p[1] and 2 * p[1] < p[0]
        elif f in NAMED:
            ok = p == ()
        else:
            raise InvalidSpec(f"unknown family {f!r}")
        if not ok:
            raise InvalidSpec(f"invalid parameters {p} for family {f!r}")

    @property
    def name(self) -> str:
        if self.family == GENERALIZED_PETERSEN:
            return f"gp:{self.params[0]},{self.params[1]}"
        if self.params:
            return f"{self.family}:{self.params[0]}"
        return self.family


def parse_family(text: str) -> FamilySpec:
    """Parse ``cycle:6``, ``gp:10,2``, ``triplex`` and friends."""
    name, _, arg = text.strip().lower().partition(":")
    try:
        params = tuple(int(a) for a in arg.split(",")) if arg else ()
    except ValueError:
        raise InvalidSpec(f"bad family parameters in {text!r}") from None
    return FamilySpec(name, params)


def path_graph(k: int) -> Graph:
    return make_family(FamilySpec(PATH, (k,)))


def cycle_graph(k: int) -> Graph:
    return make_family(FamilySpec(CYCLE, (k,)))


def generalized_petersen(k: int, t: int) -> Graph:
    return make_family(FamilySpec(GENERALIZED_PETERSEN, (k, t)))


def petersen() -> Graph:
    return make_family(FamilySpec(PETERSEN))


def dodecahedral() -> Graph:
    return make_family(FamilySpec(DODECAHEDRAL))


def half_dodecahedral() -> Graph:
    return make_family(FamilySpec(HALF_DODECAHEDRAL))


def triplex() -> Graph:
    return make_family(FamilySpec(TRIPLEX))


def _gp_edges(k, t):
    # outer u_i = i, inner v_i = k + i
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + t) % k))
        edges.append((i, k + i))
    return 2 * k, edges


def make_family(spec: FamilySpec) -> Graph:
    f, p = spec.family, spec.params
    if f == PATH:
        n, edges = p[0], [(i, i + 1) for i in range(p[0] - 1)]
    elif f == CYCLE:
        n, edges = p[0], [(i, (i + 1) % p[0]) for i in range(p[0])]
    elif f == GENERALIZED_PETERSEN:
        n, edges = _gp_edges(*p)
    elif f == PETERSEN:
        n, edges = _gp_edges(5, 2)
    elif f == DODECAHEDRAL:
        n, edges = _gp_edges(10, 2)
    elif f == HALF_DODECAHEDRAL:
        # inner pentagon a_i = i, spoke ends b_i = 5 + i, outer c_i = 10 + i;
        # the b's and c's alternate around a 10-cycle
        n = 15
        edges = []
        for i in range(5):
            edges += [(i, (i + 1) % 5), (i, 5 + i), (5 + i, 10 + i), (10 + i, 5 + (i + 1) % 5)]
    elif f == TRIPLEX:
        n = 12
        edges = [(i, (i + 1) % 12) for i in range(12)]
        edges += [(a - 1, b - 1) for a, b in TRIPLEX_CHORDS]
    else:  # pragma: no cover - FamilySpec validates
        raise InvalidSpec(f)
    return build_graph(n, edges)


def catalog_all(max_cycle: int = 20, path_len: int = 50) -> list[tuple[str, Graph, list[tuple[int, int]]]]:
    """Every finite stand-in for the classification, with the edges to check.

    Cycles ``C6..C_max_cycle``, a path whose interior edges model the
    infinite path, and the four named cubic-or-subcubic graphs.
    """
    if max_cycle < 6:
        raise InvalidSpec("max_cycle must be at least 6")
    if path_len < 4:
        raise InvalidSpec("path_len must be at least 4")
    entries = []
    for k in range(6, max_cycle + 1):
        g = cycle_graph(k)
        entries.append((f"cycle:{k}", g, list(g.edges())))
    g = path_graph(path_len)
    interior = [(u, v) for u, v in g.edges() if g.degree(u) == 2 and g.degree(v) == 2]
    entries.append((f"path:{path_len}", g, interior))
    for name in NAMED:
        g = make_family(FamilySpec(name))
        entries.append((name, g, list(g.edges())))
    return entries
