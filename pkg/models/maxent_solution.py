from dataclasses import dataclass, field
import logging

import numpy as np

from models.bipartite_graph import BipartiteGraph
from shared.errors import ConvergenceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MaxEntSolution:
    """
    Entropy maximizer in Q(H, X) together with the derived invariants.

    `table` has one axis per vertex of H: class-1 vertices first (alphabet k1), then class-2
    vertices (alphabet k2). `edge_factors[e]` is a k1 x k2 nonnegative table for the e-th
    edge of `h_graph.edges`; their product reproduces `table` up to normalization.
    """

    h_graph: BipartiteGraph
    table: np.ndarray
    m_value: float
    d_star: float
    t_star: float
    h_star: float
    residual: float
    iterations: int
    converged: bool
    tol: float
    edge_factors: tuple[np.ndarray, ...] = field(default_factory=tuple)

    def reconstruct(self) -> np.ndarray:
        """Normalized product of the edge factors (the H-Gibbs form)."""
        n1 = self.h_graph.n1
        ndim = self.table.ndim
        product = np.ones(self.table.shape)
        for (a, b), factor in zip(self.h_graph.edges, self.edge_factors):
            shape = [1] * ndim
            shape[a] = factor.shape[0]
            shape[n1 + b] = factor.shape[1]
            product = product * factor.reshape(shape)
        total = product.sum()
        return product / total if total > 0 else product

    def gibbs_residual(self) -> float:
        """Total-variation distance between the table and its factor reconstruction."""
        return 0.5 * float(np.abs(self.reconstruct() - self.table).sum())

    def require_converged(self) -> "MaxEntSolution":
        if not self.converged:
            raise ConvergenceError(
                f"IPF did not reach tol={self.tol:g} within {self.iterations} sweeps "
                f"(residual {self.residual:.3g})"
            )
        return self

    def to_report(self) -> dict:
        return {
            "m": self.m_value,
            "d_star": self.d_star,
            "t_star": self.t_star,
            "h_star": self.h_star,
            "residual": self.residual,
            "iterations": self.iterations,
            "converged": self.converged,
        }
