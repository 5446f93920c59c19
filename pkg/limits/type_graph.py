from fractions import Fraction
from itertools import product
from math import factorial, prod
from typing import Iterable
import logging

import pandas as pd
from sympy.utilities.iterables import multiset_permutations

from bgraph.counter import HomomorphismCounter
from bgraph.density import h_density
from entropy.solver import MaxEntSolver
from models.bipartite_graph import BipartiteGraph
from models.joint_distribution import JointDistribution
from shared.constants import TYPE_GRAPH_CAP, TYPE_GRAPH_EDGE_CAP
from shared.errors import CapExceededError, DistributionError

logger = logging.getLogger(__name__)


def _multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    return factorial(sum(counts)) // prod(factorial(c) for c in counts)


def type_counts(nu: JointDistribution, N: int) -> list[list[int]]:
    """N * nu(i, j) for every cell; raises unless all are integers."""
    if not nu.is_exact:
        raise DistributionError("type graphs need a distribution in rational mode")
    if N < 1:
        raise DistributionError(f"sequence length N must be positive, got {N}")
    counts = []
    for row in nu.exact:
        scaled = [N * value for value in row]
        if any(Fraction(v).denominator != 1 for v in scaled):
            raise DistributionError(f"N={N} does not make N * nu integral")
        counts.append([int(v) for v in scaled])
    return counts


def _sequences(counts: list[int]) -> list[tuple[int, ...]]:
    symbols = [symbol for symbol, c in enumerate(counts) for _ in range(c)]
    return [tuple(s) for s in multiset_permutations(symbols)]


def type_graph(nu: JointDistribution, N: int, cap: int = TYPE_GRAPH_CAP,
               edge_cap: int = TYPE_GRAPH_EDGE_CAP) -> BipartiteGraph:
    """
    Class 1: length-N sequences over F1 with empirical distribution nu_1; class 2 likewise for
    nu_2; edges join the pairs whose joint empirical distribution is nu.
    """
    counts = type_counts(nu, N)
    rows = [sum(row) for row in counts]
    cols = [sum(counts[i][j] for i in range(nu.k1)) for j in range(nu.k2)]

    size1, size2 = _multinomial(rows), _multinomial(cols)
    degree1 = prod(_multinomial(row) for row in counts)
    if max(size1, size2) > cap:
        logger.error("Type graph classes %d/%d above cap %d", size1, size2, cap)
        raise CapExceededError("LOGLIM_TYPE_GRAPH_CAP", max(size1, size2), cap)
    if size1 * degree1 > edge_cap:
        raise CapExceededError("LOGLIM_TYPE_GRAPH_EDGE_CAP", size1 * degree1, edge_cap)

    class1 = _sequences(rows)
    class2 = _sequences(cols)
    index2 = {sequence: k for k, sequence in enumerate(class2)}
    # per symbol i of F1: the arrangements of F2 symbols over the positions where x = i
    fillings = [_sequences(row) for row in counts]

    edges = []
    for a, x in enumerate(class1):
        positions = [[p for p, symbol in enumerate(x) if symbol == i] for i in range(nu.k1)]
        for choice in product(*fillings):
            y = [0] * N
            for where, values in zip(positions, choice):
                for p, value in zip(where, values):
                    y[p] = value
            edges.append((a, index2[tuple(y)]))

    graph = BipartiteGraph(len(class1), len(class2), tuple(edges))
    assert graph.is_biregular
    logger.debug("Type graph N=%d: %d+%d vertices, %d edges", N, graph.n1, graph.n2, graph.num_edges)
    return graph


def main_theorem_experiment(nu: JointDistribution, h: BipartiteGraph, N_list: Iterable[int],
                            solver: MaxEntSolver | None = None,
                            counter: HomomorphismCounter | None = None) -> pd.DataFrame:
    """h(H, type graph) over increasing N against h*(H, nu); gap = h - h*."""
    target = (solver or MaxEntSolver()).solve(h, nu).h_star
    rows = []
    for N in N_list:
        graph = type_graph(nu, N)
        value = h_density(h, graph, counter)
        rows.append({"N": N, "h": value, "h_star": target, "gap": value - target})
        logger.info("Type graph N=%d: h=%.6f h*=%.6f", N, value, target)
    return pd.DataFrame(rows, columns=["N", "h", "h_star", "gap"])
