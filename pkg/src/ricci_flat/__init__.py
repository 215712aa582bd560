"""Exact Lin-Lu-Yau Ricci curvature and Ricci-flat graphs of girth at least five."""

from .catalog import (
    FamilySpec,
    catalog_all,
    cycle_graph,
    dodecahedral,
    generalized_petersen,
    half_dodecahedral,
    make_family,
    parse_family,
    path_graph,
    petersen,
    triplex,
)
from .errors import RicciFlatError
from .graph_core import (
    ACYCLIC,
    UNREACHABLE,
    Graph,
    bfs_distances,
    build_graph,
    girth,
    is_connected,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .pentagon import (
    EdgeProfile,
    EmbeddingResult,
    FiveCycle,
    edge_profile,
    five_cycles_through,
    pentagon_embedding,
    verify_lemma1,
)
from .search import CensusRecord, canonical_form, classify_ricci_flat, enumerate_graphs
from .transport import (
    Measure,
    TransportCertificate,
    is_ricci_flat,
    kappa_alpha,
    lazy_measure,
    lly_curvature,
    validate_certificate,
    wasserstein,
)

__version__ = "0.1.0"
