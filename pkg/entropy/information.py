from fractions import Fraction
import logging

import numpy as np
from scipy.stats import entropy as shannon_entropy

from models.bipartite_graph import BipartiteGraph
from models.joint_distribution import JointDistribution
from shared.errors import DistributionError, UndefinedDensityError

logger = logging.getLogger(__name__)


def entropy(x: JointDistribution | np.ndarray) -> float:
    """Shannon entropy in nats of a joint distribution or of any probability vector/table."""
    p = x.table if isinstance(x, JointDistribution) else np.asarray(x, dtype=float)
    flat = p.ravel()
    if flat.size == 0 or flat.sum() <= 0:
        return 0.0
    return float(shannon_entropy(flat))


def marginal_entropies(x: JointDistribution) -> tuple[float, float]:
    return entropy(x.marginal1), entropy(x.marginal2)


def mutual_information(x: JointDistribution) -> float:
    """I(X1;X2) = H(X1) + H(X2) - H(X), clipped at 0 against rounding."""
    h1, h2 = marginal_entropies(x)
    return max(0.0, h1 + h2 - entropy(x))


def beta_e_of(x: JointDistribution) -> float:
    """H(X) / (H(X1) + H(X2)); the entropy-based sparsity exponent of a finite distribution."""
    h1, h2 = marginal_entropies(x)
    if h1 + h2 == 0:
        raise UndefinedDensityError("beta_e is undefined when both marginals are deterministic")
    return entropy(x) / (h1 + h2)


def from_graph(g: BipartiteGraph) -> JointDistribution:
    """Distribution of a uniform random edge of g (rational mode)."""
    if not g.has_edges:
        raise DistributionError("a graph without edges has no edge distribution")
    share = Fraction(1, g.num_edges)
    edges = g.edge_set
    rows = [[share if (i, j) in edges else Fraction(0) for j in range(g.n2)] for i in range(g.n1)]
    return JointDistribution.from_rows(rows)


def product(x: JointDistribution, y: JointDistribution) -> JointDistribution:
    """Distribution of ((X1, Y1), (X2, Y2)) for independent X and Y; pair (a, b) has index a*k + b."""
    if x.is_exact and y.is_exact:
        rows = [[x.exact[a1][a2] * y.exact[b1][b2]
                 for a2 in range(x.k2) for b2 in range(y.k2)]
                for a1 in range(x.k1) for b1 in range(y.k1)]
        return JointDistribution.from_rows(rows)
    return JointDistribution(x.k1 * y.k1, x.k2 * y.k2, np.kron(x.table, y.table))


def point_mass() -> JointDistribution:
    return JointDistribution.from_rows([[1]])


def uniform(k1: int, k2: int) -> JointDistribution:
    """Uniform product distribution on k1 x k2 (X1 and X2 independent)."""
    share = Fraction(1, k1 * k2)
    return JointDistribution.from_rows([[share] * k2 for _ in range(k1)])


def diagonal(k: int) -> JointDistribution:
    """X1 = X2 uniform on k values."""
    share = Fraction(1, k)
    return JointDistribution.from_rows(
        [[share if i == j else Fraction(0) for j in range(k)] for i in range(k)])


def independent(p1, p2) -> JointDistribution:
    """Product of two marginals given as probability vectors (floats or Fractions)."""
    rows = [[a * b for b in p2] for a in p1]
    return JointDistribution.from_rows(rows)


def random_distribution(k1: int, k2: int, rng: np.random.Generator, sparsity: float = 0.0,
                        concentration: float = 1.0) -> JointDistribution:
    """Dirichlet-distributed table; each cell is zeroed with probability `sparsity` (one cell survives)."""
    weights = rng.dirichlet(np.full(k1 * k2, concentration)).reshape(k1, k2)
    if sparsity > 0:
        keep = rng.random((k1, k2)) >= sparsity
        if not keep.any():
            keep[np.unravel_index(int(np.argmax(weights)), weights.shape)] = True
        weights = np.where(keep, weights, 0.0)
    return JointDistribution(k1, k2, weights / weights.sum())
