"""Chromatic symmetric functions of graphs: monomial and Schur expansions,
nice / strongly-nice / Schur-positivity checkers with witnesses, stable
partition counting, and the swap injection certifying strong niceness of
claw-free graphs."""

from .errors import (
    ChromsymError,
    CountOverflow,
    EmptyWord,
    GraphTooLarge,
    InvalidPoset,
    InvalidSize,
    NegativeCoefficient,
    NotClawFree,
    OracleTooLarge,
    TypeMismatch,
    VertexOutOfRange,
    WeightMismatch,
)
from .graphs import (
    Graph,
    Poset,
    antichain_poset,
    boolean_lattice,
    chain_poset,
    claw_graph,
    complete_bipartite_graph,
    cycle_graph,
    empty_graph,
    find_claw,
    format_edge_list,
    format_graph6,
    incomparability_graph,
    induced_subgraph,
    is_claw_free,
    parse_edge_list,
    parse_graph6,
    path_graph,
    random_graph,
    read_graph,
    separating_example_graph,
    squid_graph,
)
from .injection import (
    InjectionReport,
    PathOrCycle,
    TwoBlockDecomposition,
    decompose_block_pair,
    swap_down,
    swap_up,
    verify_injection,
    word_of,
)
from .kernels import active_backend_name, set_backend
from .niceness import (
    NicenessWitness,
    graph_is_nice,
    graph_is_strongly_nice,
    implication_chain_check,
    is_nice,
    is_strongly_nice,
)
from .partitions import (
    CoveringPair,
    as_partition,
    covering_pair_for,
    covering_pairs,
    covers,
    dominance_leq,
    dominance_lt,
    format_partition,
    multiplicity_factorial,
    parse_partition,
    partitions_of,
)
from .stable import (
    blocks_to_json,
    count_of_type,
    count_types,
    enumerate_stable_partitions,
    has_type,
    is_semi_ordered_stable_partition,
    is_stable_set,
    render_stable_partition,
    semi_ordered_counts,
    semi_ordered_partitions_of_type,
    stable_partitions_of_type,
    type_of,
)
from .symfunc import (
    Expansion,
    coloring_distribution_oracle,
    csf_m,
    is_schur_positive,
    kostka,
    m_to_s,
    s_to_m,
)

__version__ = "0.1.0"
