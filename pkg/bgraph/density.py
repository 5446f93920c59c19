from fractions import Fraction
import logging
import math

from bgraph.canonical import enumerate_test_graphs
from bgraph.counter import HomomorphismCounter, hom_count
from bgraph.generators import single_edge
from bgraph.operations import tensor_product
from models.bipartite_graph import BipartiteGraph
from models.limit_profile import LimitProfile
from shared.constants import DEFAULT_TEST_GRAPH_CAP, MAX_VERTICES
from shared.errors import GraphValidationError, UndefinedDensityError

logger = logging.getLogger(__name__)

P1 = single_edge()


def t(h: BipartiteGraph, g: BipartiteGraph, counter: HomomorphismCounter | None = None) -> Fraction:
    """Homomorphism density as an exact reduced fraction."""
    maps = g.n1 ** h.n1 * g.n2 ** h.n2
    return Fraction(hom_count(h, g, counter), maps)


def log_fraction(value: Fraction) -> float:
    """ln of a positive fraction from the logs of its (big integer) numerator and denominator."""
    if value <= 0:
        return -math.inf
    return math.log(value.numerator) - math.log(value.denominator)


def d(h: BipartiteGraph, g: BipartiteGraph, counter: HomomorphismCounter | None = None) -> float:
    return -log_fraction(t(h, g, counter))


def _h_from_logs(d_h: float, d_p1: float, num_edges: int) -> float:
    if d_p1 == 0:
        return float(num_edges)
    return d_h / d_p1


def h_density(h: BipartiteGraph, g: BipartiteGraph, counter: HomomorphismCounter | None = None) -> float:
    """d(H,G)/d(P1,G); |E(H)| when G is complete bipartite."""
    if not h.has_edges or not g.has_edges:
        logger.error("h(H,G) requested for an edgeless graph: H=%r G=%r", h, g)
        raise UndefinedDensityError("h(H,G) is undefined when H or G has no edge")
    return _h_from_logs(d(h, g, counter), d(P1, g, counter), h.num_edges)


def density_report(h: BipartiteGraph, g: BipartiteGraph,
                   counter: HomomorphismCounter | None = None) -> dict:
    hom = hom_count(h, g, counter)
    value = Fraction(hom, g.n1 ** h.n1 * g.n2 ** h.n2)
    report = {
        "hom": hom,
        "t": float(value),
        "t_exact": f"{value.numerator}/{value.denominator}",
        "d": -log_fraction(value),
        "h": None,
    }
    if h.has_edges and g.has_edges:
        report["h"] = _h_from_logs(report["d"], d(P1, g, counter), h.num_edges)
    return report


def tau_profile(g: BipartiteGraph, cap: int = DEFAULT_TEST_GRAPH_CAP,
                counter: HomomorphismCounter | None = None) -> LimitProfile:
    """The truncated vector (h(H,G))_H over canonical test graphs with at most `cap` vertices."""
    if not g.has_edges:
        raise UndefinedDensityError("tau(G) needs a graph with at least one edge")

    d_p1 = d(P1, g, counter)
    entries = {}
    for key, test_graph in enumerate_test_graphs(cap):
        entries[key] = _h_from_logs(d(test_graph, g, counter), d_p1, test_graph.num_edges)
    logger.debug("tau profile of %r: %d entries", g, len(entries))
    return LimitProfile(cap, entries)


def kappa(g1: BipartiteGraph, g2: BipartiteGraph, cap: int = DEFAULT_TEST_GRAPH_CAP,
          counter: HomomorphismCounter | None = None) -> float:
    """Truncated kappa: sum over test graphs of |h(H,g1) - h(H,g2)| * 2^(-|V(H)|^2)."""
    return tau_profile(g1, cap, counter).distance(tau_profile(g2, cap, counter))


def mixing_weight(g: BipartiteGraph, k: BipartiteGraph, n: int, m: int,
                  counter: HomomorphismCounter | None = None) -> float:
    """Weight of tau(g) in tau(g^n x k^m): n d(P1,g) / (n d(P1,g) + m d(P1,k))."""
    g_part, k_part = n * d(P1, g, counter), m * d(P1, k, counter)
    if g_part + k_part == 0:
        # both factors complete: every profile entry is |E(H)| whatever the weight
        return 0.5
    return g_part / (g_part + k_part)


def convex_combination(g: BipartiteGraph, k: BipartiteGraph, n: int, m: int,
                       max_vertices: int = MAX_VERTICES,
                       counter: HomomorphismCounter | None = None) -> tuple[BipartiteGraph, float]:
    """
    The tensor power L = g^n x k^m and the weight w with tau(L) = w tau(g) + (1 - w) tau(k).
    t(H, .) is multiplicative under the tensor product, so d(H, L) = n d(H,g) + m d(H,k).
    """
    if n < 0 or m < 0 or n + m == 0:
        raise GraphValidationError(f"tensor exponents must be nonnegative and not both zero, got n={n}, m={m}")
    if not g.has_edges or not k.has_edges:
        raise UndefinedDensityError("convex combinations need factors with at least one edge")

    factors = [g] * n + [k] * m
    power = factors[0]
    for factor in factors[1:]:
        power = tensor_product(power, factor, max_vertices)
    weight = mixing_weight(g, k, n, m, counter)
    logger.info("Tensor power %r^%d x %r^%d has %d+%d vertices, weight %.6f",
                g, n, k, m, power.n1, power.n2, weight)
    return power, weight


def mixed_profile(g: BipartiteGraph, k: BipartiteGraph, n: int, m: int,
                  cap: int = DEFAULT_TEST_GRAPH_CAP,
                  counter: HomomorphismCounter | None = None) -> LimitProfile:
    """tau(g^n x k^m) from the profiles of the factors, without building the power."""
    if n < 0 or m < 0 or n + m == 0:
        raise GraphValidationError(f"tensor exponents must be nonnegative and not both zero, got n={n}, m={m}")
    weight = mixing_weight(g, k, n, m, counter)
    return tau_profile(g, cap, counter).mix(tau_profile(k, cap, counter), weight)
