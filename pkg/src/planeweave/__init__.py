"""Exact-arithmetic drawings of 2-degenerate graphs with four plane forests,
plus desk-scale tools for the matching lower-bound machinery."""
from .errors import (CollinearInput, DegenerateInput, IncompleteColoring, InvalidCertificate, NotAllCrossing,
                     NotTwoDegenerate, OverlapError, ParseError, PlaneweaveError, PreconditionError,
                     ShapeMismatch, SizeOverflow, UnknownVertex)
from .exactgeom import Crossing, Point, Rat, Segment, format_rat, point, rat, segment, segments_cross
from .graphs import (DegenerateGraph, HeightMap, degeneracy_order, generate_lower_bound_graph, heights,
                     normalize_predecessors, random_2degenerate, strip_dummy)
from .layout import ColoredDrawing, EdgeColor, construct_drawing, coordinate_bits
from .verify import (FeasibilityReport, build_conflict_graph, check_feasible, color_class_is_forest,
                     min_plane_decomposition, min_plane_forest_decomposition, monochromatic_crossings)

__version__ = "0.1.0"
