from itertools import product
import logging

import numpy as np
from sympy import isprime

from models.bipartite_graph import BipartiteGraph
from shared.errors import GraphValidationError

logger = logging.getLogger(__name__)


def projective_points(p: int) -> list[tuple[int, int, int]]:
    """Nonzero vectors of F_p^3 whose first nonzero coordinate is 1."""
    points = []
    for vector in product(range(p), repeat=3):
        nonzero = [c for c in vector if c]
        if nonzero and nonzero[0] == 1:
            points.append(vector)
    return points


def projective_plane_incidence(p: int) -> BipartiteGraph:
    """Points (class 1) against lines (class 2) of PG(2, p); a point lies on a line iff x . l = 0 mod p."""
    if not isprime(p):
        raise GraphValidationError(f"projective plane generator needs a prime, got {p}")

    points = np.array(projective_points(p), dtype=np.int64)
    incidence = (points @ points.T) % p == 0
    rows, cols = np.nonzero(incidence)
    graph = BipartiteGraph(len(points), len(points), tuple(zip(rows.tolist(), cols.tolist())))

    size = p * p + p + 1
    assert graph.n1 == graph.n2 == size
    assert graph.num_edges == (p + 1) * size
    assert set(graph.degrees1) == {p + 1} and set(graph.degrees2) == {p + 1}
    logger.debug("PG(2,%d) incidence graph: %d points, %d flags", p, size, graph.num_edges)
    return graph
