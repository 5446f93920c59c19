from typing import Optional, Sequence
import logging
import math

import numpy as np

from entropy.information import entropy, marginal_entropies, mutual_information
from models.bipartite_graph import BipartiteGraph
from models.joint_distribution import JointDistribution
from models.maxent_solution import MaxEntSolution
from shared.constants import CAP_CELLS, MAXENT_MAX_SWEEPS, MAXENT_TOL, ZERO_INFORMATION_TOL
from shared.errors import CapExceededError, GraphValidationError

logger = logging.getLogger(__name__)


def _is_single_edge(h: BipartiteGraph) -> bool:
    return (h.n1, h.n2, h.num_edges) == (1, 1, 1)


class MaxEntSolver:
    """
    Maximum-entropy distribution on F1^V1(H) x F2^V2(H) whose marginal on every edge of H is
    the given X, by cyclic iterative proportional fitting.

    The table has one axis per vertex of H (class-1 vertices first). It starts uniform on the
    homomorphisms into the support of X, so cells outside that support stay at zero, and each
    step rescales the table so one edge marginal matches X exactly.
    """

    def __init__(self, tol: float = MAXENT_TOL, max_sweeps: int = MAXENT_MAX_SWEEPS,
                 cap_cells: float = CAP_CELLS):
        self.tol = tol
        self.max_sweeps = max_sweeps
        self.cap_cells = cap_cells

    def _check(self, h: BipartiteGraph, x: JointDistribution):
        if not h.has_edges or h.has_isolated_vertex:
            logger.error("Max-ent test graph must have edges and no isolated vertex: %r", h)
            raise GraphValidationError("max-ent test graph needs at least one edge and no isolated vertex")
        cells = float(x.k1) ** h.n1 * float(x.k2) ** h.n2
        if cells > self.cap_cells:
            logger.error("Max-ent state space of %.3g cells above cap %.3g", cells, self.cap_cells)
            raise CapExceededError("LOGLIM_CAP_CELLS", cells, self.cap_cells)

    @staticmethod
    def _edge_shape(h: BipartiteGraph, x: JointDistribution, edge) -> list[int]:
        shape = [1] * h.num_vertices
        shape[edge[0]] = x.k1
        shape[h.n1 + edge[1]] = x.k2
        return shape

    @staticmethod
    def _edge_marginal(table: np.ndarray, h: BipartiteGraph, edge) -> np.ndarray:
        keep = (edge[0], h.n1 + edge[1])
        other = tuple(axis for axis in range(table.ndim) if axis not in keep)
        return table.sum(axis=other)

    def solve(self, h: BipartiteGraph, x: JointDistribution,
              edge_order: Optional[Sequence[int]] = None) -> MaxEntSolution:
        self._check(h, x)
        nu = x.table
        if _is_single_edge(h):
            return self._finish(h, x, nu.copy(), 0.0, 0, True, (x.support.astype(float) * nu,))

        edges = h.edges
        order = list(range(len(edges))) if edge_order is None else list(edge_order)
        if sorted(order) != list(range(len(edges))):
            raise GraphValidationError(f"edge_order {order} is not a permutation of the edge indices")

        shapes = [self._edge_shape(h, x, e) for e in edges]
        support = x.support.astype(float)
        factors = [support.copy() for _ in edges]

        table = np.ones((x.k1,) * h.n1 + (x.k2,) * h.n2)
        for shape in shapes:
            table = table * support.reshape(shape)
        table /= table.sum()

        logger.info("IPF for %r over %d cells (tol=%g, max_sweeps=%d)",
                    h, table.size, self.tol, self.max_sweeps)

        residual = math.inf
        sweeps = 0
        while sweeps < self.max_sweeps:
            sweeps += 1
            for index in order:
                marginal = self._edge_marginal(table, h, edges[index])
                ratio = np.divide(nu, marginal, out=np.zeros_like(nu), where=marginal > 0)
                table *= ratio.reshape(shapes[index])
                factor = factors[index] * ratio
                factors[index] = factor / factor.max()

            residual = max(0.5 * float(np.abs(self._edge_marginal(table, h, e) - nu).sum())
                           for e in edges)
            logger.debug("IPF sweep %d residual %.3e", sweeps, residual)
            if residual <= self.tol:
                break

        converged = residual <= self.tol
        if not converged:
            logger.warning("IPF stopped after %d sweeps with residual %.3e > tol %g",
                           sweeps, residual, self.tol)
        table /= table.sum()
        return self._finish(h, x, table, residual, sweeps, converged, tuple(factors))

    def _finish(self, h: BipartiteGraph, x: JointDistribution, table: np.ndarray, residual: float,
                sweeps: int, converged: bool, factors: tuple) -> MaxEntSolution:
        m_value = entropy(table)
        h1, h2 = marginal_entropies(x)
        if _is_single_edge(h):
            d = mutual_information(x)
        else:
            d = max(0.0, h1 * h.n1 + h2 * h.n2 - m_value)
        information = mutual_information(x)
        if entropy(x.table) <= ZERO_INFORMATION_TOL:
            logger.warning("X is deterministic; reporting h* = |E(H)| = %d", h.num_edges)
        h_value = float(h.num_edges) if information <= ZERO_INFORMATION_TOL else d / information
        table.setflags(write=False)
        return MaxEntSolution(
            h_graph=h,
            table=table,
            m_value=m_value,
            d_star=d,
            t_star=math.exp(-d),
            h_star=h_value,
            residual=residual,
            iterations=sweeps,
            converged=converged,
            tol=self.tol,
            edge_factors=factors,
        )


def maxent(h: BipartiteGraph, x: JointDistribution, tol: float = MAXENT_TOL,
           max_sweeps: int = MAXENT_MAX_SWEEPS, cap_cells: float = CAP_CELLS) -> MaxEntSolution:
    return MaxEntSolver(tol, max_sweeps, cap_cells).solve(h, x)


def m(h: BipartiteGraph, x: JointDistribution, **kwargs) -> float:
    return maxent(h, x, **kwargs).m_value


def d_star(h: BipartiteGraph, x: JointDistribution, **kwargs) -> float:
    if _is_single_edge(h):
        return mutual_information(x)
    return maxent(h, x, **kwargs).d_star


def t_star(h: BipartiteGraph, x: JointDistribution, **kwargs) -> float:
    return math.exp(-d_star(h, x, **kwargs))


def h_star(h: BipartiteGraph, x: JointDistribution, **kwargs) -> float:
    """d*(H,X) / I(X1;X2), or |E(H)| when X1 and X2 are independent."""
    if mutual_information(x) <= ZERO_INFORMATION_TOL:
        return float(h.num_edges)
    return maxent(h, x, **kwargs).h_star
