from fractions import Fraction
import math

import pytest
from hypothesis import given, settings

from bgraph import generators
from bgraph.canonical import canonical_key, enumerate_test_graphs
from bgraph.density import (
    convex_combination, d, density_report, h_density, kappa, mixed_profile, t, tau_profile,
)
from bgraph.operations import blow_up, edge_subgraph
from models.bipartite_graph import BipartiteGraph
from shared.errors import GraphValidationError, ProfileError, UndefinedDensityError
from tests.conftest import bipartite_graphs, random_graph


class TestDensities:
    def test_single_edge_density(self, p1, c6):
        assert t(p1, c6) == Fraction(6, 9)

    def test_c4_in_c6(self, c4, c6):
        assert t(c4, c6) == Fraction(2, 9)
        assert h_density(c4, c6) == pytest.approx(math.log(9 / 2) / math.log(3 / 2))

    def test_complete_target_gives_edge_count(self, c4, c6):
        target = generators.complete(2, 3)
        assert h_density(c6, target) == 6.0
        assert h_density(c4, target) == 4.0

    def test_single_edge_has_h_one(self, p1, rng):
        g = random_graph(rng, 5, 5, p=0.4)
        if g.is_complete:
            pytest.skip("complete sample")
        assert h_density(p1, g) == pytest.approx(1.0)

    def test_edgeless_is_undefined(self, p1, c4):
        with pytest.raises(UndefinedDensityError):
            h_density(p1, BipartiteGraph(2, 2))
        with pytest.raises(UndefinedDensityError):
            h_density(BipartiteGraph(1, 1), c4)

    def test_report(self, c4, c6):
        report = density_report(c4, c6)
        assert report["hom"] == 18
        assert report["t_exact"] == "2/9"
        assert report["d"] == pytest.approx(math.log(4.5))
        assert report["h"] == pytest.approx(h_density(c4, c6))

    def test_report_on_edgeless_target(self, p1):
        report = density_report(p1, BipartiteGraph(2, 2))
        assert report["hom"] == 0
        assert report["d"] == math.inf
        assert report["h"] is None


class TestBounds:
    @settings(max_examples=40, deadline=None)
    @given(g=bipartite_graphs(max_class=4))
    def test_h_between_one_and_class_product(self, g):
        for _, h in enumerate_test_graphs(4):
            value = h_density(h, g)
            assert 1 - 1e-9 <= value <= h.n1 * h.n2 + 1e-9

    @pytest.mark.parametrize("h", [generators.path(2), generators.path(3), generators.path(4),
                                   generators.even_cycle(4), generators.even_cycle(6),
                                   generators.complete(2, 3)],
                             ids=["path2", "path3", "path4", "c4", "c6", "k23"])
    def test_known_sidorenko_graphs(self, h, rng):
        for _ in range(5):
            g = random_graph(rng, 6, 5, p=0.5)
            assert h_density(h, g) <= h.num_edges + 1e-9

    @settings(max_examples=30, deadline=None)
    @given(g=bipartite_graphs(max_class=4), h=bipartite_graphs(max_class=3, min_edges=2))
    def test_removing_edges_lowers_d(self, g, h):
        sub = edge_subgraph(h, h.edges[1:])
        assert d(sub, g) <= d(h, g) + 1e-12


class TestOperationInvariance:
    def test_blow_up(self, c4, c6):
        assert h_density(c4, blow_up(c6, 3, 2)) == pytest.approx(h_density(c4, c6))

    def test_tau_profile_entries(self, c6):
        profile = tau_profile(c6, cap=4)
        assert len(profile) == 8
        assert profile[canonical_key(generators.single_edge())] == pytest.approx(1.0)
        assert profile[canonical_key(generators.even_cycle(4))] == pytest.approx(h_density(generators.even_cycle(4), c6))

    def test_tau_needs_edges(self):
        with pytest.raises(UndefinedDensityError):
            tau_profile(BipartiteGraph(2, 2), cap=3)


class TestKappa:
    def test_zero_on_self_and_blow_up(self, c6):
        assert kappa(c6, c6, cap=4) == 0.0
        assert kappa(c6, blow_up(c6, 2, 2), cap=4) == pytest.approx(0.0, abs=1e-12)

    def test_complete_graphs_are_indistinguishable(self):
        assert kappa(generators.complete(2, 3), generators.complete(4, 1), cap=4) == 0.0

    def test_symmetric_and_positive(self, c6, rng):
        g = random_graph(rng, 4, 4, p=0.5)
        if g.is_complete:
            pytest.skip("complete sample")
        forward = kappa(c6, g, cap=4)
        assert forward == pytest.approx(kappa(g, c6, cap=4))
        assert forward >= 0.0


class TestConvexCombination:
    def test_power_density_is_product(self, c4, c6):
        k = generators.path(3)
        power, _ = convex_combination(c6, k, 2, 1)
        assert (power.n1, power.n2, power.num_edges) == (18, 18, 108)
        for h in (generators.single_edge(), c4, generators.path(2)):
            assert t(h, power) == t(h, c6) ** 2 * t(h, k)

    def test_profile_of_power_is_mix_of_profiles(self, c6):
        k = generators.path(3)
        power, weight = convex_combination(c6, k, 2, 1)
        expected = 2 * d(generators.single_edge(), c6)
        assert weight == pytest.approx(expected / (expected + d(generators.single_edge(), k)))

        direct = tau_profile(power, 4)
        mixed = tau_profile(c6, 4).mix(tau_profile(k, 4), weight)
        assert direct.entries.keys() == mixed.entries.keys()
        for key in direct.entries:
            assert direct[key] == pytest.approx(mixed[key], abs=1e-9)
        assert mixed_profile(c6, k, 2, 1, 4).distance(direct) == pytest.approx(0.0, abs=1e-12)

    def test_complete_factor_drops_out(self, c6):
        power, weight = convex_combination(c6, generators.complete(2, 2), 1, 2)
        assert weight == 1.0
        assert tau_profile(power, 4).distance(tau_profile(c6, 4)) == pytest.approx(0.0, abs=1e-12)

    def test_mix_endpoints_and_bad_weight(self, c6):
        profile_g, profile_k = tau_profile(c6, 4), tau_profile(generators.path(3), 4)
        assert profile_g.mix(profile_k, 1.0).entries == profile_g.entries
        assert profile_g.mix(profile_k, 0.0).entries == profile_k.entries
        with pytest.raises(ProfileError):
            profile_g.mix(profile_k, 1.5)

    def test_bad_exponents(self, c6):
        with pytest.raises(GraphValidationError):
            convex_combination(c6, c6, 0, 0)
        with pytest.raises(UndefinedDensityError):
            convex_combination(c6, BipartiteGraph(2, 2), 1, 1)
