from groups.subgroups import generated_subgroup, trivial_subgroup, whole_group, intersection, join, all_subgroups
from groups.catalog import (
    from_elements, cyclic, dihedral, direct_product, quaternion, symmetric_group,
    alternating_group, heisenberg, group_catalog,
)
from groups.cosets import left_coset_index, coset_graph, WCounter, w_count, t_via_w, hom_count_via_w
from groups.automorphisms import AutomorphismSearch, is_edge_vertex_transitive
from groups.projective import projective_points, projective_plane_incidence
from groups.sweep import catalog_triples, w_identity_sweep, sidorenko_sweep, gluing_identities

__all__ = [
    "generated_subgroup", "trivial_subgroup", "whole_group", "intersection", "join", "all_subgroups",
    "from_elements", "cyclic", "dihedral", "direct_product", "quaternion", "symmetric_group",
    "alternating_group", "heisenberg", "group_catalog",
    "left_coset_index", "coset_graph", "WCounter", "w_count", "t_via_w", "hom_count_via_w",
    "AutomorphismSearch", "is_edge_vertex_transitive",
    "projective_points", "projective_plane_incidence",
    "catalog_triples", "w_identity_sweep", "sidorenko_sweep", "gluing_identities",
]
