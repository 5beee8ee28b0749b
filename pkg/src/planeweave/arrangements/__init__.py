"""Lower-bound machinery at desk scale: grids, convex position, Ramsey-type searches."""
from .convex import (GridContext, QType, classify_Q_edge, convex_position_subset, grid_context,
                     is_tidy, max_convex_subset, separated)
from .ramsey import (GammaGraph, find_quadrant_hub, gamma_graph, is_admissible, is_quadrant_hub,
                     monochromatic_biclique, pairwise_crossing_edges)
from .segments import (ColoredSegmentFamily, GridCertificate, TwoTwo, canonical_grid, classify_two_two,
                       crossing_sign, crossing_vector, exhaustive_grid, find_k_grid,
                       generate_no_grid_family, is_grid_equivalent, pigeonhole_grid)
