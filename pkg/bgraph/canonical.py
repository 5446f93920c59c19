from functools import lru_cache
from itertools import permutations
import logging

import numpy as np

from models.bipartite_graph import BipartiteGraph
from models.limit_profile import CanonicalKey
from shared.constants import DEFAULT_TEST_GRAPH_CAP, MAX_TEST_GRAPH_CAP
from shared.errors import CapExceededError

logger = logging.getLogger(__name__)

# permutations of the smaller class are enumerated; 8! is the practical ceiling
MAX_PERMUTED_CLASS = 8


def _rows(g: BipartiteGraph) -> list[tuple[int, ...]]:
    return [tuple(row) for row in g.dense_biadjacency().tolist()]


def _bits_with_row_order(rows: list[tuple[int, ...]], order: tuple[int, ...]) -> tuple[int, ...]:
    # for a fixed row order the row-major minimum sorts the columns as tuples
    columns = sorted(zip(*(rows[r] for r in order)))
    return tuple(column[r] for r in range(len(order)) for column in columns)


def _bits_with_column_order(rows: list[tuple[int, ...]], order: tuple[int, ...]) -> tuple[int, ...]:
    # for a fixed column order the row-major minimum sorts the rows
    permuted = sorted(tuple(row[c] for c in order) for row in rows)
    return tuple(bit for row in permuted for bit in row)


def canonical_key(g: BipartiteGraph) -> CanonicalKey:
    """
    Lexicographically minimal row-major biadjacency bitmap over independent permutations
    of both classes, prefixed by the class sizes. Equal keys iff label-preserving isomorphic.
    """
    smaller = min(g.n1, g.n2)
    if smaller > MAX_PERMUTED_CLASS or max(g.n1, g.n2) > 255:
        raise CapExceededError("canonical_key_class_size", smaller, MAX_PERMUTED_CLASS)

    rows = _rows(g)
    if g.n1 <= g.n2:
        best = min(_bits_with_row_order(rows, order) for order in permutations(range(g.n1)))
    else:
        best = min(_bits_with_column_order(rows, order) for order in permutations(range(g.n2)))

    packed = np.packbits(np.asarray(best, dtype=np.uint8)).tobytes()
    return CanonicalKey(bytes([g.n1, g.n2]) + packed)


def graph_from_key(key: CanonicalKey) -> BipartiteGraph:
    n1, n2 = key[0], key[1]
    bits = np.unpackbits(np.frombuffer(key[2:], dtype=np.uint8))[: n1 * n2].reshape(n1, n2)
    rows, cols = np.nonzero(bits)
    return BipartiteGraph(n1, n2, tuple(zip(rows.tolist(), cols.tolist())))


@lru_cache(maxsize=None)
def _enumerate(cap: int) -> tuple[tuple[CanonicalKey, BipartiteGraph], ...]:
    found: dict[CanonicalKey, BipartiteGraph] = {}
    for total in range(2, cap + 1):
        for n1 in range(1, total):
            n2 = total - n1
            for mask in range(1, 1 << (n1 * n2)):
                edges = [(cell // n2, cell % n2) for cell in range(n1 * n2) if mask >> cell & 1]
                if {i for i, _ in edges} != set(range(n1)) or {j for _, j in edges} != set(range(n2)):
                    continue
                g = BipartiteGraph(n1, n2, tuple(edges))
                key = canonical_key(g)
                if key not in found:
                    found[key] = graph_from_key(key)

    ordered = sorted(found.items(), key=lambda item: (item[1].num_vertices, item[1].n1, item[0]))
    logger.info("Enumerated %d test graph classes with at most %d vertices", len(ordered), cap)
    return tuple(ordered)


def enumerate_test_graphs(cap: int = DEFAULT_TEST_GRAPH_CAP,
                          max_cap: int = MAX_TEST_GRAPH_CAP) -> list[tuple[CanonicalKey, BipartiteGraph]]:
    """One representative per isomorphism class with an edge, no isolated vertex, <= cap vertices."""
    if cap > max_cap:
        logger.error("Test-graph cap %s above configured maximum %s", cap, max_cap)
        raise CapExceededError("LOGLIM_MAX_TEST_GRAPH_CAP", cap, max_cap)
    return list(_enumerate(cap))
