from typing import Iterable
import logging

import pandas as pd

from bgraph.canonical import canonical_key
from entropy.information import entropy, marginal_entropies
from entropy.solver import MaxEntSolver
from models.bipartite_graph import BipartiteGraph
from models.joint_distribution import JointDistribution
from shared.constants import SIDORENKO_MARGIN_TOL

logger = logging.getLogger(__name__)


def sidorenko_entropy_check(h: BipartiteGraph, x: JointDistribution,
                            solver: MaxEntSolver | None = None) -> dict:
    """
    Compare m(H,X) with |E(H)| H(X) - sum over vertices of (deg(v) - 1) H(X_class(v)).
    The inequality holds for every Sidorenko graph H.
    """
    solution = (solver or MaxEntSolver()).solve(h, x)
    h1, h2 = marginal_entropies(x)
    excess = sum(d - 1 for d in h.degrees1) * h1 + sum(d - 1 for d in h.degrees2) * h2
    rhs = h.num_edges * entropy(x) - excess
    lhs = solution.m_value
    return {
        "lhs": lhs,
        "rhs": rhs,
        "margin": lhs - rhs,
        "holds": lhs >= rhs - SIDORENKO_MARGIN_TOL,
        "converged": solution.converged,
    }


def entropy_sidorenko_sweep(graphs: Iterable[BipartiteGraph], distributions: Iterable[JointDistribution],
                            solver: MaxEntSolver | None = None) -> pd.DataFrame:
    """One row per (H, X) pair; `holds` is False only when the entropy inequality fails."""
    solver = solver or MaxEntSolver()
    distributions = list(distributions)
    rows = []
    for h in graphs:
        key = canonical_key(h).hex()
        for index, x in enumerate(distributions):
            check = sidorenko_entropy_check(h, x, solver)
            rows.append({"H_key": key, "x_index": index, **check})

    frame = pd.DataFrame(rows, columns=["H_key", "x_index", "lhs", "rhs", "margin", "holds", "converged"])
    failures = int((~frame["holds"]).sum()) if not frame.empty else 0
    if failures:
        logger.warning("Entropy Sidorenko inequality failed in %d of %d checks", failures, len(frame))
    else:
        logger.info("Entropy Sidorenko inequality held in all %d checks", len(frame))
    return frame
