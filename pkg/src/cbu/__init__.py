from ._graph import (
    Graph,
    Orientation,
    WalkCycle,
    Subdivision,
    edge_key,
    iter_orientations,
    enumerate_cycles,
    subdivide,
    add_false_twin,
)
from ._labeling import (
    ArcLabeling,
    BadCycle,
    SlotCycle,
    SlotSystem,
    check_labeling,
    solve_labeling,
    find_bad_cycle,
    expand_certificate,
    has_quasi_cycle,
    classify_short_cycle,
    synthesize_by_source_merge,
)
from ._standard_graphs import (
    cycle_graph,
    path_graph,
    complete_graph,
    complete_bipartite_graph,
    grid_graph,
    grid_vertex,
    crown_graph,
)
from ._families import (
    shift_graph,
    shift_graph_vertices,
    shift_graph_labeling,
    good_c5_labeling,
    jones_graph,
    jones_labeling,
    double_wheel_subdivided,
    series_parallel_gadget,
    g1,
    g2,
    g3,
    r_prime_graph,
    r_prime_layout,
    family_table,
    generate_family,
)
from ._homomorphism import is_homomorphism, find_homomorphism_c5, pullback_labeling
from ._analysis import (
    MAX_EXACT_VERTICES,
    FractionalColoring,
    find_triangle,
    find_coloring,
    girth,
    independence_number,
    chromatic_number,
    fractional_coloring,
    fractional_chromatic_number,
)
from ._search import (
    DEFAULT_BUDGET,
    SearchStats,
    edge_order,
    branch_and_prune,
    exhaustive_search,
    find_cover_orientation,
)
from ._problem import CbuProblem
from ._recognition_options import RecognitionOptions
from ._recognition import Recognition, RecognitionResult, CbuCertificate, decide_cbu

from . import geometry
from . import constructors
from . import utils
from . import tools

from ._version import __version__


__all__ = [
    "Graph",  # public API, basic usage
    "Orientation",  # public API, basic usage
    "WalkCycle",
    "Subdivision",
    "edge_key",
    "iter_orientations",
    "enumerate_cycles",
    "subdivide",
    "add_false_twin",
    "ArcLabeling",  # public API, basic usage
    "BadCycle",
    "SlotCycle",
    "SlotSystem",  # public API, for advanced usage (own search)
    "check_labeling",
    "solve_labeling",
    "find_bad_cycle",
    "expand_certificate",
    "has_quasi_cycle",
    "classify_short_cycle",
    "synthesize_by_source_merge",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "grid_graph",
    "grid_vertex",
    "crown_graph",
    "shift_graph",
    "shift_graph_vertices",
    "shift_graph_labeling",
    "good_c5_labeling",
    "jones_graph",
    "jones_labeling",
    "double_wheel_subdivided",
    "series_parallel_gadget",
    "g1",
    "g2",
    "g3",
    "r_prime_graph",
    "r_prime_layout",
    "family_table",
    "generate_family",
    "is_homomorphism",
    "find_homomorphism_c5",
    "pullback_labeling",
    "MAX_EXACT_VERTICES",
    "FractionalColoring",
    "find_triangle",
    "find_coloring",
    "girth",
    "independence_number",
    "chromatic_number",
    "fractional_coloring",
    "fractional_chromatic_number",
    "DEFAULT_BUDGET",
    "SearchStats",
    "edge_order",
    "branch_and_prune",
    "exhaustive_search",
    "find_cover_orientation",
    "CbuProblem",  # public API, basic usage
    "RecognitionOptions",  # public API, basic usage
    "Recognition",  # public API, basic usage
    "RecognitionResult",  # public API, for advanced usage (own tool)
    "CbuCertificate",  # public API, basic usage
    "decide_cbu",  # public API, basic usage
]


# Set default logging handler to avoid "No handler found" warnings.
import logging as _logging

_logging.getLogger(__name__).addHandler(_logging.NullHandler())
