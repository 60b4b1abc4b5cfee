"""Coloring graphs, link-vertex detection and base-graph reconstruction."""

from .errors import (
    AmbiguityError,
    BudgetExceeded,
    NotALinkVertex,
    PreconditionError,
    RecolorError,
    StructuralInconsistency,
    SurplusViolation,
)
from .graph import (
    SimpleGraph,
    chromatic_number,
    complement,
    connected_components,
    disjoint_union,
    is_proper_coloring,
)
from .iso import canonical_certificate, graph_isomorphic, is_isomorphic
from .coloring import (
    Coloring,
    HypercubeWitness,
    LabeledColoringGraph,
    build_coloring_graph,
    enumerate_colorings,
    free_colors,
    hypercube_from_corner,
    is_link_coloring,
    is_weak_link_coloring,
    strip_labels,
)

__version__ = "0.1.0"
