import math

import pytest

from bgraph import generators
from limits.quasi import R_profile, exact_params
from limits.sparsity import beta_e, beta_hat, beta_v, g_n, g_n_codegree, sparsity_report, t_n_codegree
from models.bipartite_graph import BipartiteGraph
from shared.errors import ProfileError, UndefinedDensityError
from tests.conftest import random_graph

SKEWED = BipartiteGraph(2, 3, ((0, 0), (0, 1), (0, 2), (1, 0)))


def _random_non_complete(rng, count):
    graphs = []
    while len(graphs) < count:
        g = random_graph(rng, int(rng.integers(3, 7)), int(rng.integers(3, 7)), p=0.5)
        if not g.is_complete and g.num_edges >= 2:
            graphs.append(g)
    return graphs


class TestExponents:
    def test_complete(self):
        assert beta_v(generators.complete(3, 4)) == pytest.approx(1.0)
        assert beta_e(generators.complete(3, 4)) == pytest.approx(1.0)

    def test_cycle(self, c6):
        expected = math.log(6) / math.log(9)
        assert beta_v(c6) == pytest.approx(expected)
        assert beta_e(c6) == pytest.approx(expected)

    def test_skewed_degrees(self):
        assert beta_v(SKEWED) == pytest.approx(0.7737, abs=1e-4)
        assert beta_e(SKEWED) == pytest.approx(0.8653, abs=1e-4)

    def test_ordering(self, rng):
        for g in _random_non_complete(rng, 10):
            assert 0 < beta_v(g) <= beta_e(g) + 1e-12 <= 1 + 1e-12

    def test_degenerate(self, p1):
        with pytest.raises(UndefinedDensityError):
            beta_v(p1)
        with pytest.raises(UndefinedDensityError):
            beta_e(BipartiteGraph(2, 2))


class TestGn:
    def test_cycle_codegree_sums(self, c6):
        for n in (1, 2, 5):
            assert t_n_codegree(c6, n) == pytest.approx(2 * math.log(1 + 2 ** (1 - n)))

    def test_homomorphism_and_codegree_forms_agree(self, rng):
        for g in _random_non_complete(rng, 8):
            for n in range(1, 6):
                assert g_n(g, n) == pytest.approx(g_n_codegree(g, n), abs=1e-9)

    def test_nonnegative(self, rng):
        for g in _random_non_complete(rng, 8):
            assert all(g_n(g, n) >= -1e-12 for n in range(1, 6))

    def test_complete_codegree_form_undefined(self):
        with pytest.raises(UndefinedDensityError):
            g_n_codegree(generators.complete(2, 2), 3)
        assert g_n(generators.complete(2, 2), 3) == pytest.approx(6.0)

    def test_quasi_random_limit(self):
        params = exact_params(0.5, 0.5)
        assert all(g_n(params, n) == pytest.approx(2.0) for n in range(1, 8))
        assert beta_hat(params, 10) == pytest.approx(0.5)

    def test_profile_source(self):
        profile = R_profile(exact_params(0.5, 0.5), cap=5)
        assert g_n(profile, 3) == pytest.approx(2.0)
        with pytest.raises(ProfileError):
            g_n(profile, 4)

    def test_n_must_be_positive(self, c6):
        with pytest.raises(ValueError):
            g_n(c6, 0)


class TestBetaHat:
    def test_regular_twin_free(self, c6):
        assert beta_hat(c6, 20) == pytest.approx(math.log(6) / math.log(9), abs=1e-4)

    def test_bounded_by_beta_v(self, rng):
        for g in _random_non_complete(rng, 8):
            assert beta_hat(g, 8) <= beta_v(g) + 1e-9

    def test_report(self, c6):
        report = sparsity_report(c6, n_max=5)
        assert sorted(report.g_values) == [1, 2, 3, 4, 5]
        assert sorted(report.t_values) == [1, 2, 3, 4, 5]
        assert report.beta_v == pytest.approx(report.beta_e)
        assert report.beta_hat <= report.beta_v + 1e-12

    def test_report_on_complete_graph(self):
        report = sparsity_report(generators.complete(2, 3), n_max=3)
        assert report.t_values == {}
        assert report.beta_v == pytest.approx(1.0)
