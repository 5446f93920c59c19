from limits.quasi import (
    homomorphic_images, image_signatures, R_value, D_value, M_value, max_image_D,
    d_maximizing_images, complete_bipartite_R, R_profile, exact_params,
)
from limits.sparsity import beta_v, beta_e, t_n_codegree, g_n_codegree, g_n, beta_hat, sparsity_report
from limits.type_graph import type_counts, type_graph, main_theorem_experiment

__all__ = [
    "homomorphic_images", "image_signatures", "R_value", "D_value", "M_value", "max_image_D",
    "d_maximizing_images", "complete_bipartite_R", "R_profile", "exact_params",
    "beta_v", "beta_e", "t_n_codegree", "g_n_codegree", "g_n", "beta_hat", "sparsity_report",
    "type_counts", "type_graph", "main_theorem_experiment",
]
