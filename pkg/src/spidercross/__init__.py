"""Maximum rectilinear crossing numbers of spiders.

Bounds, an explicit crossing-rich convex drawing, exact geometric checks and
exhaustive/stochastic search over convex drawings.
"""

__version__ = "0.1.0"

from .spider import (  # noqa: E402
    CENTER,
    EdgeRef,
    LegTooShort,
    NonPositiveLeg,
    SpiderError,
    SpiderSpec,
    TooFewLegs,
    VertexLabel,
    are_incident,
    edge,
    enumerate_edges,
    enumerate_vertices,
    make_spider,
    thrackle_bound,
)
from .geometry import (  # noqa: E402
    CoordinateDrawing,
    NotGoodDrawing,
    Orientation,
    RationalPoint,
    count_crossings_geometric,
    orientation,
    segments_properly_cross,
    validate_good_drawing,
)
from .convex import (  # noqa: E402
    CyclicOrder,
    algorithm_order,
    chords_cross,
    count_crossings_convex,
    missed_pairs,
    realize,
)
from .bounds import (  # noqa: E402
    AuxGraph,
    BoundsReport,
    KTooSmall,
    auxiliary_graph,
    bounds_report,
    conjectured_mrcr,
    exact_s_k_2,
    is_triangle_free,
    lower_bound,
    mantel_max_edges,
    upper_bound,
)
from .search import BudgetExceeded, SearchResult, exhaustive_max, hill_climb, verify_conjecture  # noqa: E402
from .export import export_svg, export_tikz  # noqa: E402
