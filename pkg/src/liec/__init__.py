"""Locally irregular edge colorings: recognition, exact search, construction.

An edge coloring is locally irregular when every color class induces a
subgraph in which adjacent vertices have distinct degrees.  This package
decides which graphs admit such a coloring, computes the minimum number of
colors exactly on small graphs, and builds 3-color solutions in polynomial
time for trees, unicyclic graphs and cacti with vertex-disjoint cycles.
"""

from .coloring import (
    AliecStatus,
    EdgeColoring,
    aliec_status,
    color_degree,
    color_sequence,
    combine,
    invert,
    verify_liec,
)
from .construct import (
    ConstructionTrace,
    ResistantReport,
    TraceStep,
    cactus_vdc_3liec,
    shrub_2aliec,
    shrub_based_coloring,
    spidey_glue,
    tree_liec,
    unicyclic_3liec,
)
from .errors import (
    BudgetExceeded,
    ConstructionError,
    DisconnectedInput,
    DuplicateEdge,
    FewerThanTwoCycles,
    InTPrime,
    InvalidSpec,
    LiecError,
    LoopEdge,
    MalformedLine,
    NotACactus,
    NotAShortLeg,
    NotASpidey,
    NotATree,
    NotCactusVdc,
    NotColorable,
    NotUnicyclic,
    OverlappingEdges,
    PartialColoring,
    PreconditionViolated,
    TooLarge,
    UnknownVertex,
    WrongClass,
)
from .families import (
    PathAttachment,
    TDecomposition,
    exhaustive_colorable,
    is_colorable,
    is_T_member,
    is_T_prime_member,
)
from .generate import (
    GenSpec,
    SplitMix64,
    bowtie_graph,
    canonical_key,
    cycle_graph,
    enumerate_connected_graphs,
    enumerate_shrubs,
    enumerate_trees,
    enumerate_unicyclic,
    generate,
    path_graph,
    random_cactus_vdc,
    random_tree,
    random_unicyclic,
    spidey_graph,
    star_graph,
    t_family_graph,
)
from .graph import (
    Edge,
    EndCycleInfo,
    Graph,
    GraphClass,
    Shrub,
    classify,
    connected_components,
    cycles,
    edge,
    find_proper_end_cycle,
    format_edge_list,
    glue_at,
    is_cycle_graph,
    is_path_graph,
    is_tree,
    parse_edge_list,
    path_endpoints,
    proper_end_cycles,
    rooted_shrub,
    shrubs_at,
)
from .solver import SolveReport, chromatic_index_irregular, exists_k_liec

__version__ = "1.0.0"
