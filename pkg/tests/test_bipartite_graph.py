import networkx as nx
import numpy as np
import pytest

from bgraph import generators
from bgraph.density import t
from bgraph.operations import (
    blow_up, disjoint_union, edge_subgraph, glue_edge, glue_vertex, remove_isolated,
    symmetrize, tensor_product, validate,
)
from models.bipartite_graph import BipartiteGraph
from shared.errors import CapExceededError, GraphValidationError


class TestValidation:
    def test_single_edge_is_valid(self, p1):
        assert validate(p1)
        assert p1.has_edges

    def test_index_out_of_range(self):
        with pytest.raises(GraphValidationError, match="out of range"):
            BipartiteGraph(2, 1, ((2, 0),))

    def test_duplicate_edge(self):
        with pytest.raises(GraphValidationError, match="duplicate"):
            BipartiteGraph(1, 1, ((0, 0), (0, 0)))

    def test_empty_class(self):
        with pytest.raises(GraphValidationError):
            BipartiteGraph(0, 1)

    def test_edges_are_sorted(self):
        g = BipartiteGraph(2, 2, ((1, 1), (0, 1), (1, 0)))
        assert g.edges == ((0, 1), (1, 0), (1, 1))

    def test_dict_round_trip(self, c6):
        assert BipartiteGraph.from_dict(c6.to_dict()) == c6

    def test_dense_biadjacency_matches_sparse(self, c6):
        dense = c6.dense_biadjacency()
        assert dense.dtype == np.uint8
        assert np.array_equal(dense, c6.biadjacency().toarray())
        assert not BipartiteGraph(2, 3).dense_biadjacency().any()


class TestGenerators:
    def test_complete_2_2_is_c4(self, c4):
        k22 = generators.complete(2, 2)
        assert k22.num_edges == 4
        assert nx.is_isomorphic(k22.to_networkx(), c4.to_networkx())

    def test_even_cycle_sizes(self, c4):
        assert (c4.n1, c4.n2, c4.num_edges) == (2, 2, 4)
        c8 = generators.even_cycle(8)
        assert (c8.n1, c8.n2, c8.num_edges) == (4, 4, 8)
        assert c8.is_connected and set(c8.degrees1) == {2}

    def test_even_cycle_rejects_short_or_odd(self):
        with pytest.raises(GraphValidationError):
            generators.even_cycle(2)
        with pytest.raises(GraphValidationError):
            generators.even_cycle(5)

    @pytest.mark.parametrize("start_class, sizes", [(1, (2, 1)), (2, (1, 2))])
    def test_path2_orientation(self, start_class, sizes):
        g = generators.path(2, start_class)
        assert (g.n1, g.n2) == sizes
        assert g.num_edges == 2

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 7])
    def test_paths_are_trees(self, m):
        g = generators.path(m)
        assert g.num_edges == m
        assert g.is_connected and g.is_forest
        assert max(g.degrees1 + g.degrees2) <= 2

    def test_stars_and_matching(self):
        assert generators.star(3) == generators.complete(1, 3)
        assert generators.star(3, center_class=2) == generators.complete(3, 1)
        assert generators.matching(3).num_components == 3

    def test_nonpositive_sizes_rejected(self):
        with pytest.raises(GraphValidationError):
            generators.complete(0, 2)


class TestOperations:
    def test_blow_up_single_edge(self, p1):
        assert blow_up(p1, 2, 3) == generators.complete(2, 3)

    def test_blow_up_identity(self, c6):
        assert blow_up(c6, 1, 1) == c6

    def test_blow_up_counts(self, c6):
        g = blow_up(c6, 2, 3)
        assert (g.n1, g.n2, g.num_edges) == (6, 9, 36)

    def test_blow_up_preserves_density(self, c4, c6):
        assert t(c4, blow_up(c6, 2, 2)) == t(c4, c6)

    def test_blow_up_cap(self, c6):
        with pytest.raises(CapExceededError, match="LOGLIM_MAX_VERTICES"):
            blow_up(c6, 100, 100, max_vertices=500)

    def test_tensor_product(self, p1, c4, c6):
        assert tensor_product(p1, p1) == p1
        assert tensor_product(c6, c6).num_edges == c6.num_edges ** 2
        assert t(c4, tensor_product(c6, c6)) == t(c4, c6) ** 2

    def test_disjoint_union_multiplicative(self, p1, c4, c6):
        assert t(disjoint_union(p1, c4), c6) == t(p1, c6) * t(c4, c6)

    def test_glue_edge_of_two_edges(self, p1):
        assert glue_edge(p1, p1, (0, 0), (0, 0)) == p1

    def test_glue_vertex_builds_path(self):
        glued = glue_vertex(generators.path(1), generators.path(1), 2, 0, 0)
        assert glued == generators.path(2, start_class=1)

    def test_glue_vertex_checks_vertices(self, p1):
        with pytest.raises(GraphValidationError):
            glue_vertex(p1, p1, 1, 3, 0)

    def test_edge_subgraph_and_remove_isolated(self, c4):
        sub = edge_subgraph(c4, c4.edges[:2])
        assert sub.num_edges == 2
        assert (sub.n1, sub.n2) == (2, 2)
        trimmed = remove_isolated(sub)
        assert not trimmed.has_isolated_vertex
        assert trimmed.num_edges == 2


class TestSymmetrize:
    def test_triangle(self):
        g = symmetrize(nx.complete_graph(3))
        assert (g.n1, g.n2, g.num_edges) == (3, 3, 6)

    def test_single_undirected_edge(self, p1):
        g = symmetrize(np.array([[0, 1], [1, 0]]))
        assert (g.n1, g.n2) == (2, 2)
        assert g.edges == ((0, 1), (1, 0))
        assert t(p1, g) == pytest.approx(0.5)

    def test_rejects_asymmetric_or_loops(self):
        with pytest.raises(GraphValidationError):
            symmetrize(np.array([[0, 1], [0, 0]]))
        with pytest.raises(GraphValidationError):
            symmetrize(np.array([[1, 0], [0, 0]]))


class TestPredicates:
    def test_biregular_and_twin_free(self, c6):
        assert c6.is_biregular and c6.is_twin_free
        k23 = generators.complete(2, 3)
        assert k23.is_biregular and not k23.is_twin_free

    def test_isolated_and_forest(self):
        g = BipartiteGraph(2, 2, ((0, 0),))
        assert g.has_isolated_vertex
        assert g.is_forest
        assert g.num_components == 3
