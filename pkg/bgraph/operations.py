from typing import Iterable
import logging

import networkx as nx
import numpy as np

from models.bipartite_graph import BipartiteGraph, Edge, validate_edges
from shared.constants import MAX_VERTICES
from shared.errors import CapExceededError, GraphValidationError

logger = logging.getLogger(__name__)


def validate(g: BipartiteGraph) -> bool:
    """Re-check the type invariants of an existing graph; raises GraphValidationError."""
    validate_edges(g.n1, g.n2, g.edges)
    return True


def _check_vertex_cap(n1: int, n2: int, max_vertices: int):
    if n1 + n2 > max_vertices:
        logger.error("Construction would create %s vertices (cap %s)", n1 + n2, max_vertices)
        raise CapExceededError("LOGLIM_MAX_VERTICES", n1 + n2, max_vertices)


def blow_up(g: BipartiteGraph, m: int, n: int, max_vertices: int = MAX_VERTICES) -> BipartiteGraph:
    """Replace every class-1 vertex by m twins and every class-2 vertex by n twins."""
    if m < 1 or n < 1:
        raise GraphValidationError(f"blow-up factors must be at least 1, got m={m}, n={n}")
    _check_vertex_cap(g.n1 * m, g.n2 * n, max_vertices)

    edges = [(i * m + a, j * n + b) for i, j in g.edges for a in range(m) for b in range(n)]
    return BipartiteGraph(g.n1 * m, g.n2 * n, tuple(edges))


def tensor_product(g1: BipartiteGraph, g2: BipartiteGraph,
                   max_vertices: int = MAX_VERTICES) -> BipartiteGraph:
    """Class i of the product is V_i(g1) x V_i(g2); (v, w) ~ (v', w') iff both coordinates are edges."""
    _check_vertex_cap(g1.n1 * g2.n1, g1.n2 * g2.n2, max_vertices)
    edges = [(v * g2.n1 + w, v2 * g2.n2 + w2) for v, v2 in g1.edges for w, w2 in g2.edges]
    return BipartiteGraph(g1.n1 * g2.n1, g1.n2 * g2.n2, tuple(edges))


def disjoint_union(h1: BipartiteGraph, h2: BipartiteGraph) -> BipartiteGraph:
    edges = list(h1.edges) + [(i + h1.n1, j + h1.n2) for i, j in h2.edges]
    return BipartiteGraph(h1.n1 + h2.n1, h1.n2 + h2.n2, tuple(edges))


def _merge_map(size: int, offset: int, glued: int, target: int) -> list[int]:
    """Index map for h2's vertices of one class: `glued` goes to `target`, the rest follow h1's."""
    mapping, next_index = [], offset
    for v in range(size):
        if v == glued:
            mapping.append(target)
        else:
            mapping.append(next_index)
            next_index += 1
    return mapping


def glue_vertex(h1: BipartiteGraph, h2: BipartiteGraph, cls: int, v1: int, v2: int) -> BipartiteGraph:
    """Identify vertex v1 of class `cls` in h1 with vertex v2 of the same class in h2."""
    if cls not in (1, 2):
        raise GraphValidationError(f"class must be 1 or 2, got {cls}")
    if not (0 <= v1 < h1.class_size(cls) and 0 <= v2 < h2.class_size(cls)):
        raise GraphValidationError(f"glue vertices ({v1}, {v2}) do not exist in class {cls}")

    if cls == 1:
        map1 = _merge_map(h2.n1, h1.n1, v2, v1)
        map2 = [h1.n2 + j for j in range(h2.n2)]
        n1, n2 = h1.n1 + h2.n1 - 1, h1.n2 + h2.n2
    else:
        map1 = [h1.n1 + i for i in range(h2.n1)]
        map2 = _merge_map(h2.n2, h1.n2, v2, v1)
        n1, n2 = h1.n1 + h2.n1, h1.n2 + h2.n2 - 1

    edges = set(h1.edges) | {(map1[i], map2[j]) for i, j in h2.edges}
    return BipartiteGraph(n1, n2, tuple(edges))


def glue_edge(h1: BipartiteGraph, h2: BipartiteGraph, e1: Edge, e2: Edge) -> BipartiteGraph:
    """Identify edge e1 of h1 with edge e2 of h2 (endpoints glued class by class)."""
    e1, e2 = tuple(e1), tuple(e2)
    if e1 not in h1.edge_set or e2 not in h2.edge_set:
        raise GraphValidationError(f"glue edges {e1} / {e2} are not edges of the operands")

    map1 = _merge_map(h2.n1, h1.n1, e2[0], e1[0])
    map2 = _merge_map(h2.n2, h1.n2, e2[1], e1[1])
    edges = set(h1.edges) | {(map1[i], map2[j]) for i, j in h2.edges}
    return BipartiteGraph(h1.n1 + h2.n1 - 1, h1.n2 + h2.n2 - 1, tuple(edges))


def edge_subgraph(g: BipartiteGraph, kept: Iterable[Edge]) -> BipartiteGraph:
    """Spanning subgraph on the same vertex set keeping only `kept` edges."""
    kept = {tuple(e) for e in kept}
    if not kept <= g.edge_set:
        raise GraphValidationError("kept edges must be edges of the graph")
    return BipartiteGraph(g.n1, g.n2, tuple(kept))


def symmetrize(adjacency) -> BipartiteGraph:
    """
    Represent an ordinary graph in the bipartite setting: both classes are copies of V and
    every undirected edge {v, w} becomes the two edges (v, w) and (w, v). Accepts a square
    0/1 adjacency matrix or a networkx Graph.
    """
    if isinstance(adjacency, nx.Graph):
        if adjacency.is_directed():
            raise GraphValidationError("symmetrize expects an undirected graph")
        nodes = list(adjacency.nodes())
        matrix = nx.to_numpy_array(adjacency, nodelist=nodes, dtype=int)
    else:
        matrix = np.asarray(adjacency)

    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
        raise GraphValidationError("adjacency must be a non-empty square matrix")
    if not np.array_equal(matrix, matrix.T):
        raise GraphValidationError("adjacency is not symmetric")
    if np.any(np.diag(matrix)):
        raise GraphValidationError("adjacency has loops")

    n = matrix.shape[0]
    rows, cols = np.nonzero(matrix)
    return BipartiteGraph(n, n, tuple(zip(rows.tolist(), cols.tolist())))


def remove_isolated(g: BipartiteGraph) -> BipartiteGraph:
    """Drop isolated vertices, renumbering the rest in order; g needs at least one edge."""
    if not g.has_edges:
        raise GraphValidationError("a graph without edges has no vertices left after removing isolated ones")
    keep1 = {v: k for k, v in enumerate(sorted({i for i, _ in g.edges}))}
    keep2 = {v: k for k, v in enumerate(sorted({j for _, j in g.edges}))}
    return BipartiteGraph(len(keep1), len(keep2), tuple((keep1[i], keep2[j]) for i, j in g.edges))
