"""Pre-coloring extension through contraction, with Meyniel/Artemis/Berge recognition."""
from prext.coloring import Coloring
from prext.contraction import (
    CliqueFamily,
    ContractionResult,
    FamilyError,
    StableFamily,
    cocontract,
    contract,
    lift_coloring,
)
from prext.detect import (
    ClassReport,
    Witness,
    WitnessKind,
    classify,
    find_antihole,
    find_hole,
    find_house,
    find_prism,
    is_artemis,
    is_berge,
    is_meyniel,
    is_meyniel_definitional,
    verify_witness,
)
from prext.errors import ResourceLimitError
from prext.graph import (
    Graph,
    chordless_paths_between,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edges,
    house_graph,
    induced_subgraph,
    is_clique,
    is_connected,
    is_stable,
    path_graph,
    prism_graph,
)
from prext.solve import (
    PrextAnswer,
    chromatic_number,
    clique_condition,
    co_prext_optimize,
    contracted_clique_number,
    count_extensions,
    max_clique,
    prext_decide,
    prext_optimize,
)

__version__ = "0.1.0"

__all__ = [
    "ClassReport",
    "CliqueFamily",
    "Coloring",
    "ContractionResult",
    "FamilyError",
    "Graph",
    "PrextAnswer",
    "ResourceLimitError",
    "StableFamily",
    "Witness",
    "WitnessKind",
    "chordless_paths_between",
    "chromatic_number",
    "classify",
    "clique_condition",
    "co_prext_optimize",
    "cocontract",
    "complement",
    "complete_graph",
    "contract",
    "contracted_clique_number",
    "count_extensions",
    "cycle_graph",
    "empty_graph",
    "find_antihole",
    "find_hole",
    "find_house",
    "find_prism",
    "from_edges",
    "house_graph",
    "induced_subgraph",
    "is_artemis",
    "is_berge",
    "is_clique",
    "is_connected",
    "is_meyniel",
    "is_meyniel_definitional",
    "is_stable",
    "lift_coloring",
    "max_clique",
    "path_graph",
    "prext_decide",
    "prext_optimize",
    "prism_graph",
    "verify_witness",
]
