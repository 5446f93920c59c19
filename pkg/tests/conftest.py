from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, strategies as st

from bgraph import generators
from entropy.information import random_distribution
from groups.catalog import heisenberg
from groups.cosets import coset_graph
from models.bipartite_graph import BipartiteGraph


@st.composite
def bipartite_graphs(draw, max_class: int = 4, min_edges: int = 1, no_isolated: bool = False):
    n1 = draw(st.integers(1, max_class))
    n2 = draw(st.integers(1, max_class))
    cells = [(i, j) for i in range(n1) for j in range(n2)]
    edges = draw(st.sets(st.sampled_from(cells), min_size=min(min_edges, len(cells))))
    g = BipartiteGraph(n1, n2, tuple(edges))
    if no_isolated:
        assume(not g.has_isolated_vertex)
    return g


def random_graph(rng: np.random.Generator, n1: int, n2: int, p: float = 0.5) -> BipartiteGraph:
    """Random graph with at least one edge."""
    mask = rng.random((n1, n2)) < p
    if not mask.any():
        mask[rng.integers(n1), rng.integers(n2)] = True
    rows, cols = np.nonzero(mask)
    return BipartiteGraph(n1, n2, tuple(zip(rows.tolist(), cols.tolist())))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def heisenberg2():
    return heisenberg(2)


@pytest.fixture(scope="session")
def heisenberg_graph2(heisenberg2):
    return coset_graph(*heisenberg2)


@pytest.fixture
def c4():
    return generators.even_cycle(4)


@pytest.fixture
def c6():
    return generators.even_cycle(6)


@pytest.fixture
def p1():
    return generators.single_edge()


@pytest.fixture
def random_distributions(rng):
    sizes = [(2, 2), (2, 3), (3, 2), (3, 3)]
    return [random_distribution(*sizes[k % 4], rng) for k in range(12)]


@pytest.fixture
def skewed_nu():
    """Rational joint distribution on 2 x 2 with denominator 4 and one empty cell."""
    from models.joint_distribution import JointDistribution
    return JointDistribution.from_rows([[Fraction(1, 2), Fraction(1, 4)], [0, Fraction(1, 4)]])


@pytest.fixture(scope="session")
def distribution_batch():
    """75 distributions on alphabets of size at most 3; every third one has empty cells."""
    rng = np.random.default_rng(31337)
    sizes = [(2, 2), (2, 3), (3, 2), (3, 3)]
    return [random_distribution(*sizes[k % 4], rng, sparsity=0.3 if k % 3 == 2 else 0.0)
            for k in range(75)]


@pytest.fixture(scope="session")
def dense_batch(distribution_batch):
    return [x for k, x in enumerate(distribution_batch) if k % 3 != 2]
