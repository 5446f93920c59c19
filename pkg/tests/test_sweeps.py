import pytest

from bgraph import generators
from bgraph.canonical import enumerate_test_graphs
from bgraph.density import h_density
from bgraph.operations import remove_isolated
from entropy.information import from_graph
from entropy.solver import MaxEntSolver
from groups.catalog import cyclic, dihedral, quaternion
from groups.cosets import coset_graph
from groups.subgroups import generated_subgroup
from groups.sweep import catalog_triples, gluing_identities, sidorenko_sweep, w_identity_sweep
from tests.conftest import random_graph

SMALL_GROUPS = [cyclic(6), dihedral(4), quaternion()]


def test_catalog_triples_cover_subgroup_pairs():
    triples = list(catalog_triples([cyclic(6)]))
    assert len(triples) == 16
    assert {(t1.order, t2.order) for _, t1, t2 in triples} >= {(1, 6), (6, 1), (2, 3)}


def test_w_identity_on_small_groups():
    graphs = [h for _, h in enumerate_test_graphs(4)]
    frame = w_identity_sweep(graphs, catalog_triples(SMALL_GROUPS))
    assert list(frame.columns) == ["group", "order", "t1", "t2", "H_key", "t", "t_w", "equal"]
    assert frame["equal"].all()
    assert len(frame) == (16 + 100 + 36) * len(graphs)


def test_sidorenko_on_small_groups():
    graphs = [generators.path(2), generators.path(3), generators.even_cycle(4), generators.complete(2, 3)]
    frame = sidorenko_sweep(graphs, catalog_triples(SMALL_GROUPS))
    assert frame["holds"].all()
    assert (frame["margin"] >= 0).all()


@pytest.mark.slow
def test_w_identity_over_catalog():
    graphs = [h for _, h in enumerate_test_graphs(5)]
    assert w_identity_sweep(graphs, catalog_triples(max_order=24))["equal"].all()


@pytest.mark.slow
def test_sidorenko_over_catalog():
    graphs = [h for _, h in enumerate_test_graphs(5)] + [generators.even_cycle(6)]
    assert sidorenko_sweep(graphs, catalog_triples(max_order=24))["holds"].all()


class TestGluing:
    def test_cycle_target(self, c4, c6):
        result = gluing_identities(c6, c4, generators.path(2))
        assert result["vertex_t_exact"] and result["edge_t_exact"]
        assert result["vertex_gap"] == pytest.approx(0.0, abs=1e-9)
        assert result["edge_gap"] == pytest.approx(0.0, abs=1e-9)

    def test_heisenberg_target(self, heisenberg_graph2, c4):
        result = gluing_identities(heisenberg_graph2, c4, c4, cls=1)
        assert result["vertex_t_exact"] and result["edge_t_exact"]
        assert result["h_edge_glued"] == pytest.approx(2 * result["h1"] - 1)

    def test_coset_graph_of_dihedral(self):
        d4 = dihedral(4)
        # two reflections generate D4, so the coset graph is an 8-cycle
        target = coset_graph(d4, generated_subgroup(d4, [4]), generated_subgroup(d4, [5]))
        assert target.is_connected and target.num_edges == 8 and set(target.degrees1) == {2}
        result = gluing_identities(target, generators.path(3), generators.even_cycle(4))
        assert result["vertex_t_exact"] and result["edge_t_exact"]


class TestEntropyCorrespondence:
    @pytest.mark.parametrize("h", [generators.even_cycle(4), generators.path(3), generators.complete(2, 3)],
                             ids=["c4", "path3", "k23"])
    def test_graph_value_below_entropy_value(self, h, c6, heisenberg_graph2):
        solver = MaxEntSolver(tol=1e-11)
        for g in (c6, heisenberg_graph2, generators.complete(2, 3)):
            x = from_graph(g)
            assert h_density(h, g) <= solver.solve(h, x).h_star + 1e-7

    @pytest.mark.slow
    def test_random_graphs_below_entropy_value(self, rng):
        solver = MaxEntSolver(tol=1e-12)
        patterns = [generators.even_cycle(4), generators.path(3)]
        for _ in range(100):
            g = remove_isolated(random_graph(rng, int(rng.integers(2, 5)), int(rng.integers(2, 5)), 0.6))
            x = from_graph(g)
            for h in patterns:
                assert h_density(h, g) <= solver.solve(h, x).h_star + 1e-8

    @pytest.mark.slow
    def test_coset_graphs_attain_entropy_value(self):
        solver = MaxEntSolver()
        patterns = [generators.path(2), generators.even_cycle(4)]
        checked = 0
        for group, t1, t2 in catalog_triples(max_order=24):
            target = coset_graph(group, t1, t2)
            x = from_graph(target)
            for h in patterns:
                assert solver.solve(h, x).h_star == pytest.approx(h_density(h, target), abs=1e-5)
                checked += 1
        assert checked > 1000


@pytest.mark.slow
def test_gluing_over_catalog():
    pairs = [(generators.even_cycle(4), generators.path(2)), (generators.path(3), generators.even_cycle(4))]
    for group, t1, t2 in catalog_triples(max_order=24):
        target = coset_graph(group, t1, t2)
        for h1, h2 in pairs:
            result = gluing_identities(target, h1, h2)
            assert result["vertex_t_exact"] and result["edge_t_exact"]
            assert result["vertex_gap"] == pytest.approx(0.0, abs=1e-9)
            assert result["edge_gap"] == pytest.approx(0.0, abs=1e-9)
