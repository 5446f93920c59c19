import logging
import math

from bgraph.canonical import canonical_key
from bgraph.counter import HomomorphismCounter
from bgraph.density import h_density
from bgraph.generators import complete
from entropy.information import beta_e_of, from_graph
from limits.quasi import complete_bipartite_R
from models.bipartite_graph import BipartiteGraph
from models.limit_profile import LimitProfile
from models.quasi_params import QuasiParams, SparsityReport
from shared.errors import ProfileError, UndefinedDensityError

logger = logging.getLogger(__name__)


def _require_sparsity_input(g: BipartiteGraph):
    if not g.has_edges:
        raise UndefinedDensityError("sparsity exponents need a graph with an edge")
    if g.n1 * g.n2 < 2:
        raise UndefinedDensityError("sparsity exponents are undefined when both classes are singletons")


def beta_v(g: BipartiteGraph) -> float:
    """log|E| / (log|V1| + log|V2|)."""
    _require_sparsity_input(g)
    return math.log(g.num_edges) / (math.log(g.n1) + math.log(g.n2))


def beta_e(g: BipartiteGraph) -> float:
    """H(X_G) / (H(X1) + H(X2)) for a uniform random edge X_G."""
    _require_sparsity_input(g)
    return beta_e_of(from_graph(g))


def _codegree_sums(g: BipartiteGraph, n: int) -> list[tuple[int, int]]:
    """Per class: (sum over ordered pairs v, w of codeg(v, w)^n, sum over v of deg(v)^n)."""
    matrix = g.biadjacency()
    sums = []
    for codegree in ((matrix @ matrix.T).tocoo(), (matrix.T @ matrix).tocoo()):
        everything = sum(int(c) ** n for c in codegree.data)
        diagonal = sum(int(c) ** n for r, k, c in zip(codegree.row, codegree.col, codegree.data) if r == k)
        sums.append((everything, diagonal))
    return sums


def t_n_codegree(g: BipartiteGraph, n: int) -> float:
    """T_n = sum over classes of log(sum_{v,w} codeg^n) - log(sum_v deg^n)."""
    _require_sparsity_input(g)
    return sum(math.log(everything) - math.log(diagonal) for everything, diagonal in _codegree_sums(g, n))


def g_n_codegree(g: BipartiteGraph, n: int) -> float:
    """g_n from codegree sums: (log|V1| + log|V2| - T_n) / (log|V1| + log|V2| - log|E|)."""
    _require_sparsity_input(g)
    if g.is_complete:
        raise UndefinedDensityError("the codegree form of g_n is undefined for complete bipartite graphs")
    scale = math.log(g.n1) + math.log(g.n2)
    return (scale - t_n_codegree(g, n)) / (scale - math.log(g.num_edges))


def _profile_value(profile: LimitProfile, a: int, b: int) -> float:
    key = canonical_key(complete(a, b))
    if key not in profile:
        raise ProfileError(f"profile with cap {profile.cap} has no entry for K_{{{a},{b}}}")
    return profile[key]


def g_n(source: BipartiteGraph | LimitProfile | QuasiParams, n: int,
        counter: HomomorphismCounter | None = None) -> float:
    """h(K_{2,n}) + h(K_{n,2}) - h(K_{1,n}) - h(K_{n,1}) for a graph, a profile or the quasi-random limit."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if isinstance(source, BipartiteGraph):
        def value(a, b):
            return h_density(complete(a, b), source, counter)
    elif isinstance(source, LimitProfile):
        def value(a, b):
            return _profile_value(source, a, b)
    else:
        def value(a, b):
            return float(complete_bipartite_R(source, a, b))
    return value(2, n) + value(n, 2) - value(1, n) - value(n, 1)


def beta_hat(source: BipartiteGraph | LimitProfile | QuasiParams, n_max: int,
             counter: HomomorphismCounter | None = None) -> float:
    """max over n <= n_max of 1 - 1/g_n, skipping g_n = 0."""
    candidates = []
    for n in range(1, n_max + 1):
        value = g_n(source, n, counter)
        if value == 0:
            logger.debug("g_%d vanished, skipped in beta_hat", n)
            continue
        candidates.append(1 - 1 / value)
    if not candidates:
        logger.warning("g_n vanished for every n <= %d; beta_hat undefined", n_max)
        return -math.inf
    return max(candidates)


def sparsity_report(g: BipartiteGraph, n_max: int = 20, counter: HomomorphismCounter | None = None) -> SparsityReport:
    g_values = {n: g_n(g, n, counter) for n in range(1, n_max + 1)}
    t_values = {} if g.is_complete else {n: t_n_codegree(g, n) for n in range(1, n_max + 1)}
    nonzero = [1 - 1 / v for v in g_values.values() if v != 0]
    return SparsityReport(
        beta_v=beta_v(g),
        beta_e=beta_e(g),
        beta_hat=max(nonzero) if nonzero else -math.inf,
        g_values=g_values,
        t_values=t_values,
    )
