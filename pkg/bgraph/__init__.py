from bgraph.generators import complete, even_cycle, path, matching, star, single_edge
from bgraph.operations import (
    validate, blow_up, tensor_product, disjoint_union, glue_vertex, glue_edge,
    symmetrize, edge_subgraph, remove_isolated,
)
from bgraph.canonical import canonical_key, graph_from_key, enumerate_test_graphs
from bgraph.counter import HomomorphismCounter, hom_count, hom_count_injective
from bgraph.density import (
    t, d, h_density, density_report, tau_profile, kappa, mixing_weight, convex_combination, mixed_profile,
)

__all__ = [
    "complete", "even_cycle", "path", "matching", "star", "single_edge",
    "validate", "blow_up", "tensor_product", "disjoint_union", "glue_vertex", "glue_edge",
    "symmetrize", "edge_subgraph", "remove_isolated",
    "canonical_key", "graph_from_key", "enumerate_test_graphs",
    "HomomorphismCounter", "hom_count", "hom_count_injective",
    "t", "d", "h_density", "density_report", "tau_profile", "kappa",
    "mixing_weight", "convex_combination", "mixed_profile",
]
