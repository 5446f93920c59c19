from fractions import Fraction
import logging

import networkx as nx
import numpy as np

from models.bipartite_graph import BipartiteGraph
from models.finite_group import FiniteGroup, SubgroupRef
from shared.constants import W_CAP_NODES
from shared.errors import CapExceededError, GraphValidationError, GroupError

logger = logging.getLogger(__name__)


def _require_subgroups(group: FiniteGroup, *subgroups: SubgroupRef):
    for subgroup in subgroups:
        if subgroup.parent is not group:
            raise GroupError(f"subgroup does not belong to {group.name}")


def left_coset_index(group: FiniteGroup, subgroup: SubgroupRef) -> np.ndarray:
    """Coset id of every element; ids follow the minimal element of each coset gT."""
    _require_subgroups(group, subgroup)
    index = np.full(group.order, -1, dtype=np.int64)
    members = list(subgroup.elements)
    next_id = 0
    for a in range(group.order):
        if index[a] < 0:
            index[group.table[a, members]] = next_id
            next_id += 1
    return index


def coset_graph(group: FiniteGroup, t1: SubgroupRef, t2: SubgroupRef) -> BipartiteGraph:
    """Classes are the left cosets of t1 and of t2; edges are the pairs (gT1, gT2)."""
    _require_subgroups(group, t1, t2)
    index1 = left_coset_index(group, t1)
    index2 = left_coset_index(group, t2)
    edges = set(zip(index1.tolist(), index2.tolist()))
    graph = BipartiteGraph(group.order // t1.order, group.order // t2.order, tuple(edges))
    assert graph.num_edges == group.order // t1.intersection(t2).order
    return graph


def _edge_order(h: BipartiteGraph) -> list[list[int]]:
    """Edges of each component of H in BFS order of the line graph, so each later edge meets an earlier one."""
    line = nx.Graph()
    line.add_nodes_from(range(h.num_edges))
    for e, (i, j) in enumerate(h.edges):
        for f in range(e + 1, h.num_edges):
            if h.edges[f][0] == i or h.edges[f][1] == j:
                line.add_edge(e, f)

    orders = []
    for component in sorted(nx.connected_components(line), key=min):
        root = min(component)
        orders.append([root] + [f for _, f in nx.bfs_edges(line, root)])
    return orders


class WCounter:
    """
    Counts the edge-indexed vectors (g_e) of group elements with g_e g_f^-1 in T_i whenever
    the edges e and f share a class-i vertex.
    """

    def __init__(self, group: FiniteGroup, t1: SubgroupRef, t2: SubgroupRef,
                 cap_nodes: float = W_CAP_NODES):
        _require_subgroups(group, t1, t2)
        self.group = group
        self.subgroups = {1: t1, 2: t2}
        self.cap_nodes = cap_nodes
        # g_e g_f^-1 in T  <=>  g_f in T g_e
        self.right_cosets = {
            cls: [frozenset(group.table[list(t.elements), a].tolist()) for a in range(group.order)]
            for cls, t in self.subgroups.items()
        }

    def count(self, h: BipartiteGraph) -> int:
        total = 1
        widest = max(t.order for t in self.subgroups.values())
        for order in _edge_order(h):
            estimate = float(self.group.order) * float(widest) ** max(len(order) - 2, 0)
            if estimate > self.cap_nodes:
                logger.error("W search estimate %.3g above cap %.3g", estimate, self.cap_nodes)
                raise CapExceededError("LOGLIM_W_CAP_NODES", estimate, self.cap_nodes)
            total *= self._count_component(h, order)
            if total == 0:
                break
        return total

    def _constraints(self, h: BipartiteGraph, order: list[int]) -> list[list[tuple[int, int]]]:
        """For each position, the earlier positions it shares a vertex with and the shared class."""
        constraints = []
        for p, f in enumerate(order):
            found = []
            for q in range(p):
                e = order[q]
                if h.edges[e][0] == h.edges[f][0]:
                    found.append((q, 1))
                elif h.edges[e][1] == h.edges[f][1]:
                    found.append((q, 2))
            constraints.append(found)
        return constraints

    def _count_component(self, h: BipartiteGraph, order: list[int]) -> int:
        constraints = self._constraints(h, order)
        last = len(order) - 1
        chosen = [0] * len(order)

        def extend(p: int) -> int:
            if constraints[p]:
                sets = sorted((self.right_cosets[cls][chosen[q]] for q, cls in constraints[p]), key=len)
                options = sets[0].intersection(*sets[1:]) if len(sets) > 1 else sets[0]
            else:
                options = range(self.group.order)
            if p == last:
                return len(options)
            total = 0
            for a in options:
                chosen[p] = a
                total += extend(p + 1)
            return total

        return extend(0)


def w_count(h: BipartiteGraph, group: FiniteGroup, t1: SubgroupRef, t2: SubgroupRef,
            cap_nodes: float = W_CAP_NODES) -> int:
    if not h.has_edges:
        return 1
    return WCounter(group, t1, t2, cap_nodes).count(h)


def t_via_w(h: BipartiteGraph, group: FiniteGroup, t1: SubgroupRef, t2: SubgroupRef,
            cap_nodes: float = W_CAP_NODES) -> Fraction:
    """t(H, coset graph) from |W| |T1|^|V1| |T2|^|V2| |T1 n T2|^-|E| |G|^-|V|."""
    if not h.has_edges or h.has_isolated_vertex:
        raise GraphValidationError("t_via_w needs a test graph with edges and no isolated vertex")
    common = t1.intersection(t2).order
    numerator = w_count(h, group, t1, t2, cap_nodes) * t1.order ** h.n1 * t2.order ** h.n2
    denominator = common ** h.num_edges * group.order ** h.num_vertices
    return Fraction(numerator, denominator)


def hom_count_via_w(h: BipartiteGraph, group: FiniteGroup, t1: SubgroupRef, t2: SubgroupRef,
                    cap_nodes: float = W_CAP_NODES) -> int:
    """|Hom(H, coset graph)| = |W| / |T1 n T2|^|E| for H without isolated vertices."""
    if h.has_isolated_vertex:
        raise GraphValidationError("hom_count_via_w needs a test graph without isolated vertices")
    common = t1.intersection(t2).order
    value = Fraction(w_count(h, group, t1, t2, cap_nodes), common ** h.num_edges)
    assert value.denominator == 1
    return value.numerator
