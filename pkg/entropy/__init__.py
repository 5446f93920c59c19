from entropy.information import (
    entropy, marginal_entropies, mutual_information, beta_e_of, from_graph, product,
    point_mass, uniform, diagonal, independent, random_distribution,
)
from entropy.solver import MaxEntSolver, maxent, m, d_star, t_star, h_star
from entropy.sidorenko import sidorenko_entropy_check, entropy_sidorenko_sweep

__all__ = [
    "entropy", "marginal_entropies", "mutual_information", "beta_e_of", "from_graph", "product",
    "point_mass", "uniform", "diagonal", "independent", "random_distribution",
    "MaxEntSolver", "maxent", "m", "d_star", "t_star", "h_star",
    "sidorenko_entropy_check", "entropy_sidorenko_sweep",
]
