from fractions import Fraction
from itertools import product
from typing import Iterator
import logging

from sympy.utilities.iterables import multiset_partitions

from bgraph.canonical import canonical_key, enumerate_test_graphs
from models.bipartite_graph import BipartiteGraph
from models.limit_profile import LimitProfile
from models.quasi_params import Number, QuasiParams
from shared.constants import DEFAULT_TEST_GRAPH_CAP, MAX_IMAGE_VERTICES
from shared.errors import CapExceededError, GraphValidationError

logger = logging.getLogger(__name__)

Signature = tuple[int, int, int]  # (|V1|, |V2|, |E|)


def _block_maps(n: int) -> Iterator[tuple[int, list[int]]]:
    """Every set partition of range(n) as (number of blocks, vertex -> block)."""
    for partition in multiset_partitions(list(range(n))):
        block_of = [0] * n
        for b, block in enumerate(partition):
            for v in block:
                block_of[v] = b
        yield len(partition), block_of


def _quotients(h: BipartiteGraph, max_vertices: int) -> Iterator[tuple[int, int, frozenset]]:
    if h.num_vertices > max_vertices:
        logger.error("Homomorphic images of a %d-vertex graph requested (cap %d)", h.num_vertices, max_vertices)
        raise CapExceededError("homomorphic_image_vertices", h.num_vertices, max_vertices)
    maps2 = list(_block_maps(h.n2))
    for (k1, block1), (k2, block2) in product(_block_maps(h.n1), maps2):
        yield k1, k2, frozenset((block1[i], block2[j]) for i, j in h.edges)


def homomorphic_images(h: BipartiteGraph, max_vertices: int = MAX_IMAGE_VERTICES) -> list[BipartiteGraph]:
    """Quotients of H by a partition of each class, one per isomorphism class."""
    images: dict[bytes, BipartiteGraph] = {}
    for k1, k2, edges in _quotients(h, max_vertices):
        image = BipartiteGraph(k1, k2, tuple(edges))
        images.setdefault(canonical_key(image), image)
    return sorted(images.values(), key=lambda g: (g.num_vertices, g.num_edges, g.edges))


def image_signatures(h: BipartiteGraph, max_vertices: int = MAX_IMAGE_VERTICES) -> set[Signature]:
    """(|V1|, |V2|, |E|) of every homomorphic image; R and max D only depend on these."""
    return {(k1, k2, len(edges)) for k1, k2, edges in _quotients(h, max_vertices)}


def _require_edges(h: BipartiteGraph):
    if not h.has_edges:
        raise GraphValidationError("the quasi-random functionals need a test graph with an edge")


def _collapse_cost(params: QuasiParams, removed1: int, removed2: int) -> Number:
    return (removed1 * params.alpha1 + removed2 * params.alpha2) / (1 - params.beta)


def R_value(params: QuasiParams, h: BipartiteGraph, max_vertices: int = MAX_IMAGE_VERTICES) -> Number:
    """
    min over homomorphic images H' of |E(H')| + (1-beta)^-1 sum_i (|V_i(H)| - |V_i(H')|) alpha_i;
    |E(H)| when beta = 1. Exact when the parameters are Fractions.
    """
    _require_edges(h)
    if params.is_dense:
        return h.num_edges
    return min(edges + _collapse_cost(params, h.n1 - n1, h.n2 - n2)
               for n1, n2, edges in image_signatures(h, max_vertices))


def D_value(params: QuasiParams, h: BipartiteGraph) -> Number:
    return params.alpha1 * h.n1 + params.alpha2 * h.n2 - (1 - params.beta) * h.num_edges


def M_value(params: QuasiParams, h: BipartiteGraph) -> Number:
    """Minimum of D over the subgraphs of H with at least one edge (induced ones suffice)."""
    _require_edges(h)
    best = None
    nbr_masks = [sum(1 << j for j in nbrs) for nbrs in h.neighbors1]
    for mask1 in range(1, 1 << h.n1):
        for mask2 in range(1, 1 << h.n2):
            edges = sum((nbr_masks[i] & mask2).bit_count() for i in range(h.n1) if mask1 >> i & 1)
            if not edges:
                continue
            value = (params.alpha1 * mask1.bit_count() + params.alpha2 * mask2.bit_count()
                     - (1 - params.beta) * edges)
            if best is None or value < best:
                best = value
    return best


def max_image_D(params: QuasiParams, h: BipartiteGraph, max_vertices: int = MAX_IMAGE_VERTICES) -> Number:
    _require_edges(h)
    return max(params.alpha1 * n1 + params.alpha2 * n2 - (1 - params.beta) * edges
               for n1, n2, edges in image_signatures(h, max_vertices))


def d_maximizing_images(params: QuasiParams, h: BipartiteGraph,
                        max_vertices: int = MAX_IMAGE_VERTICES) -> list[BipartiteGraph]:
    """Homomorphic images attaining max D."""
    images = homomorphic_images(h, max_vertices)
    values = [D_value(params, image) for image in images]
    best = max(values)
    return [image for image, value in zip(images, values) if value == best]


def complete_bipartite_R(params: QuasiParams, a: int, b: int) -> Number:
    """R for K_{a,b}, whose homomorphic images are exactly the K_{a',b'} with a' <= a, b' <= b."""
    if params.is_dense:
        return a * b
    return min(a1 * b1 + _collapse_cost(params, a - a1, b - b1)
               for a1 in range(1, a + 1) for b1 in range(1, b + 1))


def R_profile(params: QuasiParams, cap: int = DEFAULT_TEST_GRAPH_CAP) -> LimitProfile:
    """The quasi-random element of the limit space, truncated to test graphs with <= cap vertices."""
    entries = {key: float(R_value(params, h)) for key, h in enumerate_test_graphs(cap)}
    logger.info("R profile for beta=%s alpha=%s: %d entries", params.beta, params.alpha, len(entries))
    return LimitProfile(cap, entries)


def exact_params(beta, alpha) -> QuasiParams:
    """QuasiParams with Fraction entries (floats are converted by their shortest decimal form)."""
    return QuasiParams(Fraction(str(beta)), Fraction(str(alpha)))
