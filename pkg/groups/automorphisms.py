from collections import deque
from typing import Optional
import logging

from models.bipartite_graph import BipartiteGraph
from shared.constants import AUTOMORPHISM_MAX_VERTICES
from shared.errors import CapExceededError

logger = logging.getLogger(__name__)

Vertex = tuple[int, int]  # (class, index)


class AutomorphismSearch:
    """Backtracking search for label-preserving automorphisms with degree refinement."""

    def __init__(self, g: BipartiteGraph, max_vertices: int = AUTOMORPHISM_MAX_VERTICES):
        if g.num_vertices > max_vertices:
            raise CapExceededError("automorphism_search_vertices", g.num_vertices, max_vertices)
        self.g = g
        self.degree = {1: g.degrees1, 2: g.degrees2}

    def _adjacent(self, u: Vertex, v: Vertex) -> bool:
        if u[0] == v[0]:
            return False
        i, j = (u[1], v[1]) if u[0] == 1 else (v[1], u[1])
        return (i, j) in self.g.edge_set

    def _order(self, forced: dict[Vertex, Vertex]) -> list[Vertex]:
        """Forced vertices first, then BFS outwards so most vertices have an assigned neighbour."""
        order = list(forced)
        seen = set(order)
        queue = deque(order)
        remaining = [(1, i) for i in range(self.g.n1)] + [(2, j) for j in range(self.g.n2)]
        while len(order) < len(remaining):
            if not queue:
                start = next(v for v in remaining if v not in seen)
                seen.add(start)
                order.append(start)
                queue.append(start)
            cls, idx = queue.popleft()
            for w in sorted(self.g.neighbors(cls)[idx]):
                vertex = (3 - cls, w)
                if vertex not in seen:
                    seen.add(vertex)
                    order.append(vertex)
                    queue.append(vertex)
        return order

    def find(self, forced: dict[Vertex, Vertex]) -> Optional[dict[Vertex, Vertex]]:
        """An automorphism extending `forced`, or None."""
        for u, v in forced.items():
            if u[0] != v[0] or self.degree[u[0]][u[1]] != self.degree[v[0]][v[1]]:
                return None
        items = list(forced.items())
        for a, (u, v) in enumerate(items):
            for u2, v2 in items[:a]:
                if self._adjacent(u, u2) != self._adjacent(v, v2):
                    return None

        order = self._order(forced)
        mapping: dict[Vertex, Vertex] = dict(forced)
        used = set(forced.values())

        def candidates(vertex: Vertex) -> list[Vertex]:
            cls, idx = vertex
            anchor = next(((3 - cls, w) for w in sorted(self.g.neighbors(cls)[idx])
                           if (3 - cls, w) in mapping), None)
            if anchor is not None:
                image = mapping[anchor]
                pool = [(cls, w) for w in sorted(self.g.neighbors(3 - cls)[image[1]])]
            else:
                pool = [(cls, w) for w in range(self.g.class_size(cls))]
            degree = self.degree[cls][idx]
            return [c for c in pool if c not in used and self.degree[cls][c[1]] == degree]

        def consistent(vertex: Vertex, image: Vertex) -> bool:
            cls, idx = vertex
            for w in range(self.g.class_size(3 - cls)):
                other = (3 - cls, w)
                if other in mapping and self._adjacent(vertex, other) != self._adjacent(image, mapping[other]):
                    return False
            return True

        def extend(p: int) -> bool:
            if p == len(order):
                return True
            vertex = order[p]
            if vertex in forced:
                return extend(p + 1)
            for image in candidates(vertex):
                if consistent(vertex, image):
                    mapping[vertex] = image
                    used.add(image)
                    if extend(p + 1):
                        return True
                    del mapping[vertex]
                    used.discard(image)
            return False

        return dict(mapping) if extend(0) else None


def is_edge_vertex_transitive(g: BipartiteGraph, max_vertices: int = AUTOMORPHISM_MAX_VERTICES) -> bool:
    """
    True iff label-preserving automorphisms act transitively on V1, on V2 and on E. With no
    isolated vertices, edge transitivity implies the other two.
    """
    if not g.has_edges or g.has_isolated_vertex:
        return False
    if len(set(g.degrees1)) != 1 or len(set(g.degrees2)) != 1:
        return False

    search = AutomorphismSearch(g, max_vertices)
    first = g.edges[0]
    orbit = {first}
    for edge in g.edges[1:]:
        if edge in orbit:
            continue
        mapping = search.find({(1, first[0]): (1, edge[0]), (2, first[1]): (2, edge[1])})
        if mapping is None:
            logger.debug("No automorphism maps edge %s to %s", first, edge)
            return False
        # the orbit of the first edge is closed under the automorphism just found
        grown = set(orbit)
        frontier = list(orbit) + [edge]
        while frontier:
            i, j = frontier.pop()
            image = (mapping[(1, i)][1], mapping[(2, j)][1])
            for candidate in ((i, j), image):
                if candidate not in grown:
                    grown.add(candidate)
                    frontier.append(candidate)
        orbit = grown
    return True
