import logging
import math

import networkx as nx
import numpy as np

from bgraph.operations import symmetrize
from models.bipartite_graph import BipartiteGraph
from models.quasi_params import QuasiParams
from shared.constants import RANDOM_CELL_CAP
from shared.errors import CapExceededError, ConfigError

logger = logging.getLogger(__name__)

# n**alpha is evaluated in floating point; integral powers must not round up
CEIL_SLACK = 1e-9


def class_sizes(params: QuasiParams, n: int) -> tuple[int, int]:
    """(ceil(n^alpha), ceil(n^(1 - alpha)))."""
    return (math.ceil(n ** float(params.alpha1) - CEIL_SLACK),
            math.ceil(n ** float(params.alpha2) - CEIL_SLACK))


def edge_probability(params: QuasiParams, n: int) -> float:
    return float(n) ** (float(params.beta) - 1)


def expected_edges(params: QuasiParams, n: int) -> float:
    n1, n2 = class_sizes(params, n)
    return n1 * n2 * edge_probability(params, n)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for (seed, trial)."""
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def sample(params: QuasiParams, n: int, seed: int = 0, trial: int = 0,
           cell_cap: float = RANDOM_CELL_CAP) -> BipartiteGraph:
    """G(n, beta, alpha): each of the n1 * n2 possible edges independently with probability n^(beta-1)."""
    if n < 2:
        raise ConfigError(f"model scale n must be at least 2, got {n}")
    n1, n2 = class_sizes(params, n)
    cells = n1 * n2
    if cells > cell_cap:
        logger.error("G(n,beta,alpha) with %d x %d cells above cap %s", n1, n2, cell_cap)
        raise CapExceededError("LOGLIM_RANDOM_CELL_CAP", cells, cell_cap)

    rng = trial_rng(seed, trial)
    probability = edge_probability(params, n)
    if probability >= 1:
        chosen = np.arange(cells)
    else:
        chosen = np.sort(rng.choice(cells, size=rng.binomial(cells, probability), replace=False))
    rows, cols = np.divmod(chosen, n2)
    return BipartiteGraph(n1, n2, tuple(zip(rows.tolist(), cols.tolist())))


def sample_symmetric(n: int, beta: float, seed: int = 0, trial: int = 0) -> BipartiteGraph:
    """The ordinary-graph model G(n, beta) with edge probability n^(2 beta - 2), symmetrized."""
    if not 0 < beta <= 1:
        raise ConfigError(f"beta must lie in (0, 1], got {beta}")
    stream_seed = int(np.random.SeedSequence([seed, trial]).generate_state(1)[0])
    graph = nx.fast_gnp_random_graph(n, min(1.0, float(n) ** (2 * float(beta) - 2)), seed=stream_seed)
    return symmetrize(graph)
