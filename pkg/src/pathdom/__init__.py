"""pathdom: exact domination numbers under path addition.

The library answers, for a graph G and a vertex pair (u, v), how the
domination number responds when a path with k internal vertices is glued
between u and v.  It answers twice: by exact search on the modified
graph, and by closed-form prediction rules that never touch it.  A
verification harness machine-checks that the two routes agree on whole
corpora of graphs.
"""

from .domination import (
    DominationReport,
    all_minimum_sets_cliques,
    all_minimum_sets_efficient,
    classify_vertices,
    clear_caches,
    constrained_domination_number,
    domination_number,
    independent_domination_number,
    is_dominating,
    minimum_dominating_set,
    minimum_dominating_sets,
    private_neighbors,
)
from .families import (
    FamilySpec,
    cartesian_product,
    circulant,
    complete,
    complete_bipartite,
    corona,
    crown,
    cycle,
    edgeless,
    generalized_petersen,
    generate_family,
    join,
    parse_family_spec,
    path,
    rook,
    star,
)
from .formats import (
    GraphFormatError,
    detect_format,
    emit_edge_list,
    emit_graph6,
    load_graphs,
    parse_edge_list,
    parse_graph6,
)
from .graphs import (
    Graph,
    delete_vertices,
    edge_mask,
    enumerate_labeled_graphs,
    from_edge_mask,
    subdivide_edge,
)
from .oracle import (
    AggregateCharacterization,
    Prediction,
    RegionClass,
    all_nonadjacent_pa_three,
    characterize_aggregates,
    check_sum_bounds,
    classify_regions,
    predict_adjacent,
    predict_nonadjacent,
    predict_pair,
    predict_path_addition_number,
)
from .path_addition import (
    INFINITE,
    PaProfile,
    SolverInconsistencyError,
    add_path,
    domination_after_path,
    path_addition_number,
    path_addition_profile,
)
from .verify import CorpusSpec, SUITES, VerificationReport, iter_corpus, run_verification

__version__ = "0.1.0"
