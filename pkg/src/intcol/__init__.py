"""Interval edge colorings of complete graphs K_2n and hypercubes Q_n."""

from .graphs import (
    Family,
    Graph,
    GraphError,
    StructuralProfile,
    complete_graph,
    hypercube_graph,
    structural_profile,
)
from .coloring import (
    BoundReport,
    EdgeColoring,
    Membership,
    Verdict,
    family_membership,
    graph_bounds,
    upper_bound_W,
    verify_interval,
    verify_proper,
    vertex_spectrum,
)
from .constructions import (
    DoublingTrace,
    FactorizationParams,
    build_complete_tower,
    build_hypercube_tower,
    canonical_complete_coloring,
    dimension_coloring,
    double_complete,
    double_hypercube,
    downshift_regular,
    spectrum_colorings,
)
from .search import SearchBudget, SearchOutcome, Status, exact_W, exact_w, find_interval_coloring
from .certificates import Certificate, CertificateStore, make_certificate

__version__ = "0.1.0"
