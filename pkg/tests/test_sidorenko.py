import pytest

from bgraph import generators
from entropy.sidorenko import entropy_sidorenko_sweep, sidorenko_entropy_check
from entropy.solver import MaxEntSolver


@pytest.fixture
def solver():
    return MaxEntSolver(tol=1e-11)


def test_trees_are_tight(solver, random_distributions):
    for tree in (generators.path(3), generators.star(3)):
        for x in random_distributions[:4]:
            check = sidorenko_entropy_check(tree, x, solver)
            assert check["holds"]
            assert check["margin"] == pytest.approx(0.0, abs=1e-8)


def test_cycles_hold(solver, random_distributions, c4, skewed_nu):
    for x in random_distributions[:6] + [skewed_nu]:
        check = sidorenko_entropy_check(c4, x, solver)
        assert check["holds"] and check["converged"]
        assert check["lhs"] == pytest.approx(check["rhs"] + check["margin"])


def test_sweep_frame(solver, random_distributions, c4):
    graphs = [generators.single_edge(), c4, generators.complete(2, 3)]
    frame = entropy_sidorenko_sweep(graphs, random_distributions[:3], solver)
    assert list(frame.columns) == ["H_key", "x_index", "lhs", "rhs", "margin", "holds", "converged"]
    assert len(frame) == 9
    assert frame["holds"].all()
    assert frame["x_index"].tolist() == [0, 1, 2] * 3


def test_empty_sweep(solver):
    frame = entropy_sidorenko_sweep([], [], solver)
    assert frame.empty
