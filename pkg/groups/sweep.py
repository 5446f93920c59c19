from typing import Iterable, Iterator
import logging

import pandas as pd

from bgraph.canonical import canonical_key
from bgraph.density import P1, h_density, t
from bgraph.operations import glue_edge, glue_vertex
from groups.catalog import group_catalog
from groups.cosets import coset_graph, t_via_w
from groups.subgroups import all_subgroups
from models.bipartite_graph import BipartiteGraph
from models.finite_group import FiniteGroup, SubgroupRef

logger = logging.getLogger(__name__)

Triple = tuple[FiniteGroup, SubgroupRef, SubgroupRef]


def catalog_triples(groups: Iterable[FiniteGroup] | None = None, max_order: int = 24) -> Iterator[Triple]:
    """Every (G, T1, T2) with T1, T2 ranging over all subgroups of each catalog group."""
    for group in (group_catalog(max_order) if groups is None else groups):
        subgroups = all_subgroups(group)
        for t1 in subgroups:
            for t2 in subgroups:
                yield group, t1, t2


def w_identity_sweep(graphs: Iterable[BipartiteGraph], triples: Iterable[Triple]) -> pd.DataFrame:
    """Direct t(H, coset graph) against the W-count closed form, exactly."""
    graphs = [(canonical_key(h).hex(), h) for h in graphs]
    rows = []
    for group, t1, t2 in triples:
        target = coset_graph(group, t1, t2)
        for key, h in graphs:
            direct = t(h, target)
            via_w = t_via_w(h, group, t1, t2)
            rows.append({"group": group.name, "order": group.order, "t1": t1.order, "t2": t2.order,
                         "H_key": key, "t": float(direct), "t_w": float(via_w), "equal": direct == via_w})

    frame = pd.DataFrame(rows, columns=["group", "order", "t1", "t2", "H_key", "t", "t_w", "equal"])
    mismatches = int((~frame["equal"]).sum()) if not frame.empty else 0
    if mismatches:
        logger.warning("W identity failed on %d of %d rows", mismatches, len(frame))
    logger.info("W identity sweep: %d rows", len(frame))
    return frame


def sidorenko_sweep(graphs: Iterable[BipartiteGraph], triples: Iterable[Triple]) -> pd.DataFrame:
    """t(H, G) against t(P1, G)^|E(H)| over coset graphs; margins computed exactly."""
    graphs = [(canonical_key(h).hex(), h) for h in graphs]
    rows = []
    for group, t1, t2 in triples:
        target = coset_graph(group, t1, t2)
        edge_density = t(P1, target)
        for key, h in graphs:
            value = t(h, target)
            bound = edge_density ** h.num_edges
            rows.append({"group": group.name, "t1": t1.order, "t2": t2.order, "H_key": key,
                         "t": float(value), "bound": float(bound), "margin": float(value - bound),
                         "holds": value >= bound})

    frame = pd.DataFrame(rows, columns=["group", "t1", "t2", "H_key", "t", "bound", "margin", "holds"])
    violations = int((~frame["holds"]).sum()) if not frame.empty else 0
    if violations:
        logger.warning("Sidorenko bound violated on %d of %d rows", violations, len(frame))
    logger.info("Sidorenko sweep: %d rows", len(frame))
    return frame


def gluing_identities(target: BipartiteGraph, h1: BipartiteGraph, h2: BipartiteGraph,
                      cls: int = 2) -> dict:
    """
    On an edge-vertex transitive target, gluing two test graphs at a vertex adds their h values
    and gluing them along an edge adds them minus one. Exact t-identities are reported alongside.
    """
    vertex_glued = glue_vertex(h1, h2, cls, 0, 0)
    edge_glued = glue_edge(h1, h2, h1.edges[0], h2.edges[0])
    t1, t2 = t(h1, target), t(h2, target)
    h_1, h_2 = h_density(h1, target), h_density(h2, target)
    h_vertex, h_edge = h_density(vertex_glued, target), h_density(edge_glued, target)
    return {
        "h1": h_1,
        "h2": h_2,
        "h_vertex_glued": h_vertex,
        "h_edge_glued": h_edge,
        "vertex_gap": h_vertex - (h_1 + h_2),
        "edge_gap": h_edge - (h_1 + h_2 - 1),
        "vertex_t_exact": t(vertex_glued, target) == t1 * t2,
        "edge_t_exact": t(edge_glued, target) * t(P1, target) == t1 * t2,
    }
