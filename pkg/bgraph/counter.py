import logging

import networkx as nx
import numpy as np
from scipy import sparse

from models.bipartite_graph import BipartiteGraph
from shared.constants import HOM_CAP_NODES
from shared.errors import CapExceededError

logger = logging.getLogger(__name__)

Vertex = tuple[int, int]  # (class, index)

INT64_SAFE = float(2 ** 62)


def _search_order(h: BipartiteGraph) -> list[list[Vertex]]:
    """Per connected component: BFS order from a maximum-degree vertex."""
    graph = h.to_networkx()
    orders = []
    for component in sorted(nx.connected_components(graph), key=min):
        root = max(sorted(component), key=graph.degree)
        orders.append([root] + [v for _, v in nx.bfs_edges(graph, root)])
    return orders


def _back_neighbors(h: BipartiteGraph, order: list[Vertex]) -> list[list[int]]:
    position = {v: p for p, v in enumerate(order)}
    back = []
    for p, (cls, idx) in enumerate(order):
        other = 3 - cls
        nbrs = h.neighbors(cls)[idx]
        back.append(sorted(position[(other, w)] for w in nbrs if position.get((other, w), p) < p))
    return back


def _checked_product(x: sparse.spmatrix, y: sparse.spmatrix) -> sparse.csr_matrix:
    """Integer sparse product, refusing when entries could leave the exact int64 range."""
    bound = (x.astype(float) @ y.astype(float)).max() if x.nnz and y.nnz else 0.0
    if bound >= INT64_SAFE:
        raise CapExceededError("int64_exact_range", bound, INT64_SAFE)
    return (x @ y).tocsr()


class HomomorphismCounter:
    """
    Exact counts of label-preserving homomorphisms H -> G.

    `count` is the generic backtracking search; `count_complete`, `count_even_cycle` and
    `count_path` are closed forms for K_{a,b}, C_{2k} and P_m; `count_fast` dispatches each
    connected component of H to the cheapest applicable method.
    """

    def __init__(self, cap_nodes: float = HOM_CAP_NODES):
        self.cap_nodes = cap_nodes

    # generic search

    def count(self, h: BipartiteGraph, g: BipartiteGraph) -> int:
        total = 1
        for order in _search_order(h):
            self._check_estimate(order, g)
            total *= self._count_order(order, _back_neighbors(h, order), g, injective=False)
            if total == 0:
                break
        return total

    def count_injective(self, h: BipartiteGraph, g: BipartiteGraph) -> int:
        """Homomorphisms injective on each class (Hom_0)."""
        if h.n1 > g.n1 or h.n2 > g.n2:
            return 0
        order = [v for component in _search_order(h) for v in component]
        self._check_estimate(order, g)
        return self._count_order(order, _back_neighbors(h, order), g, injective=True)

    def _check_estimate(self, order: list[Vertex], g: BipartiteGraph):
        max_degree = {1: max(g.degrees2, default=0), 2: max(g.degrees1, default=0)}
        estimate = 1.0
        for p, (cls, _) in enumerate(order[:-1]):
            estimate *= g.class_size(cls) if p == 0 else max(max_degree[cls], 1)
        if estimate > self.cap_nodes:
            logger.error("Homomorphism search estimate %.3g above cap %.3g", estimate, self.cap_nodes)
            raise CapExceededError("LOGLIM_HOM_CAP_NODES", estimate, self.cap_nodes)

    @staticmethod
    def _count_order(order: list[Vertex], back: list[list[int]], g: BipartiteGraph, injective: bool) -> int:
        last = len(order) - 1
        image = [0] * len(order)
        used: dict[int, set[int]] = {1: set(), 2: set()}

        def candidates(p: int):
            cls = order[p][0]
            if back[p]:
                nbrs = g.neighbors(3 - cls)
                sets = sorted((nbrs[image[q]] for q in back[p]), key=len)
                found = sets[0].intersection(*sets[1:]) if len(sets) > 1 else sets[0]
            else:
                found = range(g.class_size(cls))
            if injective and used[cls]:
                return [v for v in found if v not in used[cls]]
            return found

        def extend(p: int) -> int:
            options = candidates(p)
            if p == last:
                return len(options)
            cls = order[p][0]
            total = 0
            for v in options:
                image[p] = v
                if injective:
                    used[cls].add(v)
                total += extend(p + 1)
                if injective:
                    used[cls].discard(v)
            return total

        return extend(0)

    # closed forms

    def count_complete(self, a: int, b: int, g: BipartiteGraph) -> int:
        """|Hom(K_{a,b}, G)| as a power sum of common-neighbourhood sizes."""
        if a == 1:
            return sum(d ** b for d in g.degrees1)
        if b == 1:
            return sum(d ** a for d in g.degrees2)

        matrix = g.biadjacency()
        if a == 2:
            codegree = _checked_product(matrix, matrix.T)
            return sum(int(c) ** b for c in codegree.data)
        if b == 2:
            codegree = _checked_product(matrix.T, matrix)
            return sum(int(c) ** a for c in codegree.data)

        # a, b >= 3: enumerate a-tuples of class-1 vertices with bitmask intersections
        if float(g.n1) ** a > self.cap_nodes:
            raise CapExceededError("LOGLIM_HOM_CAP_NODES", float(g.n1) ** a, self.cap_nodes)
        masks = [sum(1 << j for j in nbrs) for nbrs in g.neighbors1]

        def extend(depth: int, common: int) -> int:
            if depth == a:
                return common.bit_count() ** b
            return sum(extend(depth + 1, common & m) for m in masks if common & m)

        full = (1 << g.n2) - 1
        return extend(0, full)

    def count_even_cycle(self, k: int, g: BipartiteGraph) -> int:
        """|Hom(C_{2k}, G)| = trace((A A^T)^k)."""
        matrix = g.biadjacency()
        walks = _checked_product(matrix, matrix.T)
        if k == 2:
            return sum(int(c) ** 2 for c in walks.data)

        half = sparse.identity(g.n1, dtype=np.int64, format="csr")
        for _ in range(k // 2):
            half = _checked_product(half, walks)
        if k % 2 == 0:
            return sum(int(c) ** 2 for c in half.data)

        # trace(P M P) with P symmetric equals the entrywise sum of (P M) * P
        left = _checked_product(half, walks).tocoo()
        partner = np.asarray(half[left.row, left.col]).ravel()
        return sum(int(x) * int(y) for x, y in zip(left.data, partner))

    def count_path(self, m: int, start_class: int, g: BipartiteGraph) -> int:
        """|Hom(P_m, G)|: walks with m edges starting in `start_class`."""
        cls = start_class
        walks = [1] * g.class_size(cls)
        for _ in range(m):
            other = 3 - cls
            nbrs = g.neighbors(other)
            walks_other = [sum(walks[y] for y in nbrs[x]) for x in range(g.class_size(other))]
            walks, cls = walks_other, other
        return sum(walks)

    # dispatch

    def count_fast(self, h: BipartiteGraph, g: BipartiteGraph) -> int:
        graph = h.to_networkx()
        total = 1
        for component in sorted(nx.connected_components(graph), key=min):
            total *= self._count_component(h, component, g)
            if total == 0:
                break
        return total

    def _count_component(self, h: BipartiteGraph, component: set[Vertex], g: BipartiteGraph) -> int:
        if len(component) == 1:
            (cls, _), = component
            return g.class_size(cls)

        part = _component_graph(h, component)
        degrees = part.degrees1 + part.degrees2
        if part.is_complete:
            return self.count_complete(part.n1, part.n2, g)
        if part.n1 == part.n2 and all(d == 2 for d in degrees):
            return self.count_even_cycle(part.n1, g)
        if part.num_edges == part.num_vertices - 1 and max(degrees) <= 2:
            return self.count_path(part.num_edges, 1 if part.n1 >= part.n2 else 2, g)
        return self.count(part, g)


def _component_graph(h: BipartiteGraph, component: set[Vertex]) -> BipartiteGraph:
    index1 = {v: k for k, v in enumerate(sorted(i for c, i in component if c == 1))}
    index2 = {v: k for k, v in enumerate(sorted(j for c, j in component if c == 2))}
    edges = [(index1[i], index2[j]) for i, j in h.edges if i in index1]
    return BipartiteGraph(len(index1), len(index2), tuple(edges))


_default_counter = HomomorphismCounter()


def hom_count(h: BipartiteGraph, g: BipartiteGraph, counter: HomomorphismCounter | None = None) -> int:
    return (counter or _default_counter).count_fast(h, g)


def hom_count_injective(h: BipartiteGraph, g: BipartiteGraph,
                        counter: HomomorphismCounter | None = None) -> int:
    return (counter or _default_counter).count_injective(h, g)

