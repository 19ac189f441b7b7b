"""Exact arithmetic for H-chromatic symmetric functions of finite graphs."""

from .errors import HcsfError
from .graphs import (
    Graph,
    bipartition,
    caterpillar,
    complete,
    complete_bipartite,
    complete_multipartite,
    complete_with_loop,
    connected_components,
    contract,
    cycle,
    disjoint_union,
    edgeless,
    edgeless_with_loops,
    from_edge_list_text,
    from_graph6,
    is_bipartite,
    path,
    path_with_end_loop,
    spider,
    star,
    star_with_center_loop,
    to_edge_list_text,
)
from .homs import (
    classical_csf,
    endomorphism_count,
    enumerate_homs,
    hcsf,
    hom_count,
    hom_type_counts,
    is_rigid,
    self_csf,
    spider_endo_approximation,
    spider_endomorphism_count,
    weighted_csf,
)
from .isomorphism import automorphism_count, canonical_form, is_isomorphic
from .partitions import partitions_of, set_partitions_of_type, stirling2
from .symfunc import (
    Polynomial,
    SymFunc,
    augmented_form,
    convert,
    evaluate_ones,
    evaluate_ones_poly,
    from_lines,
    from_text,
    odot,
    omega,
    to_lines,
    to_text,
)

__all__ = [name for name in dir() if not name.startswith("_")]
