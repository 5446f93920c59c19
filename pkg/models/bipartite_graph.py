from dataclasses import dataclass
from functools import cached_property
from typing import Iterable
import logging

import networkx as nx
import numpy as np
from scipy import sparse

from shared.errors import GraphValidationError

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def validate_edges(n1: int, n2: int, edges: Iterable) -> tuple[Edge, ...]:
    """Check class sizes, index ranges and duplicates; return the edges sorted."""
    if n1 < 1 or n2 < 1:
        raise GraphValidationError(f"both classes need at least one vertex (n1={n1}, n2={n2})")

    seen: set[Edge] = set()
    for edge in edges:
        i, j = int(edge[0]), int(edge[1])
        if not (0 <= i < n1 and 0 <= j < n2):
            raise GraphValidationError(f"edge ({i},{j}) index out of range for n1={n1}, n2={n2}")
        if (i, j) in seen:
            raise GraphValidationError(f"duplicate edge ({i},{j})")
        seen.add((i, j))

    return tuple(sorted(seen))


@dataclass(frozen=True)
class BipartiteGraph:
    """
    A graph with two labeled vertex classes. Class-1 vertices are 0..n1-1, class-2
    vertices are 0..n2-1 and every edge is an ordered pair (class-1 index, class-2 index).
    Instances are immutable; edges are kept sorted.
    """

    n1: int
    n2: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", validate_edges(self.n1, self.n2, self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_vertices(self) -> int:
        return self.n1 + self.n2

    @property
    def has_edges(self) -> bool:
        """Membership in B0."""
        return bool(self.edges)

    @property
    def is_complete(self) -> bool:
        return self.num_edges == self.n1 * self.n2

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def neighbors1(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n1)]
        for i, j in self.edges:
            nbrs[i].add(j)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def neighbors2(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n2)]
        for i, j in self.edges:
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, cls: int) -> tuple[frozenset[int], ...]:
        return self.neighbors1 if cls == 1 else self.neighbors2

    def class_size(self, cls: int) -> int:
        return self.n1 if cls == 1 else self.n2

    @property
    def degrees1(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.neighbors1)

    @property
    def degrees2(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.neighbors2)

    def biadjacency(self) -> sparse.csr_matrix:
        """Sparse n1 x n2 0/1 matrix (int64)."""
        if not self.edges:
            return sparse.csr_matrix((self.n1, self.n2), dtype=np.int64)
        rows, cols = zip(*self.edges)
        data = np.ones(len(rows), dtype=np.int64)
        return sparse.csr_matrix((data, (rows, cols)), shape=(self.n1, self.n2))

    def dense_biadjacency(self) -> np.ndarray:
        matrix = np.zeros((self.n1, self.n2), dtype=np.uint8)
        if self.edges:
            rows, cols = zip(*self.edges)
            matrix[list(rows), list(cols)] = 1
        return matrix

    def to_networkx(self) -> nx.Graph:
        """Undirected networkx view; nodes are (1, i) and (2, j)."""
        graph = nx.Graph()
        graph.add_nodes_from(((1, i) for i in range(self.n1)), bipartite=0)
        graph.add_nodes_from(((2, j) for j in range(self.n2)), bipartite=1)
        graph.add_edges_from(((1, i), (2, j)) for i, j in self.edges)
        return graph

    @cached_property
    def num_components(self) -> int:
        return nx.number_connected_components(self.to_networkx())

    @property
    def is_connected(self) -> bool:
        return self.num_components == 1

    @property
    def is_forest(self) -> bool:
        return nx.is_forest(self.to_networkx())

    @property
    def has_isolated_vertex(self) -> bool:
        return 0 in self.degrees1 or 0 in self.degrees2

    @property
    def is_biregular(self) -> bool:
        return len(set(self.degrees1)) == 1 and len(set(self.degrees2)) == 1

    @property
    def is_twin_free(self) -> bool:
        """No two distinct vertices of the same class share a neighbourhood."""
        return (len(set(self.neighbors1)) == self.n1
                and len(set(self.neighbors2)) == self.n2)

    def to_dict(self) -> dict:
        return {"n1": self.n1, "n2": self.n2, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "BipartiteGraph":
        try:
            return cls(int(data["n1"]), int(data["n2"]), tuple(tuple(e) for e in data["edges"]))
        except (KeyError, TypeError, IndexError) as exc:
            raise GraphValidationError(f"malformed graph object: {exc}") from exc

    def __repr__(self) -> str:
        return f"BipartiteGraph(n1={self.n1}, n2={self.n2}, |E|={self.num_edges})"
