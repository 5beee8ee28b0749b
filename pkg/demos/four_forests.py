"""Draw a 2-degenerate graph with four plane forests and check the result.

Run:  python3 demos/four_forests.py [out.svg]
"""
import sys

from planeweave import io
from planeweave.exactgeom import format_rat
from planeweave.graphs import generate_lower_bound_graph, heights, random_2degenerate
from planeweave.layout import EdgeColor, construct_drawing, coordinate_bits
from planeweave.svg import drawing_to_svg
from planeweave.verify import (build_conflict_graph, check_feasible, color_class_is_forest,
                               min_plane_decomposition, min_plane_forest_decomposition, monochromatic_crossings)

# The smallest member of the lower-bound family: 3 roots, one common
# neighbour per pair, and so on for three more layers.
g = generate_lower_bound_graph(3, multiplicity=1)
print(f"G(3) with multiplicity 1: {g.n} vertices, {len(g.edges)} edges, layers {g.layer_sizes()}")

# Build level by level.  Each level reflects the drawing so far, picks a
# slope m and a radius eps, and tucks the new vertices just below-right of
# the points where slope-m lines meet horizontal ones.
trace = []
d = construct_drawing(g, trace)
for t in trace:
    report = check_feasible(t.drawing, t.graph, t.level)
    if t.slope is None:
        print(f"level {t.level}: base diagonal, {report.lines()[-1]}")
    else:
        print(f"level {t.level}: m = {format_rat(t.slope)}, eps = {format_rat(t.epsilon)}, {report.lines()[-1]}")

# The four colour classes h, hs, v, vs are crossing-free forests.
print("monochromatic crossings:", monochromatic_crossings(d))
for c in EdgeColor:
    print(f"  {c}: {len(d.edges_of(c))} edges, forest={color_class_is_forest(d, c)}")

# For this fixed drawing the colouring may not be optimal; the exact
# solvers say how many plane (forest) classes it really needs.
plane = min_plane_decomposition(build_conflict_graph(d.pos, d.color))
forest = min_plane_forest_decomposition(d)
print(f"fewest plane classes {plane.count}, fewest plane forests {forest.count}")

# Coordinates stay exact; dyadic slopes and radii keep them manageable.
big = random_2degenerate(80, seed=2024)
d_big = construct_drawing(big)
num, den = coordinate_bits(d_big)
print(f"random n=80, height {heights(big).top}: feasible={check_feasible(d_big, big).overall}, "
      f"coordinate bits {num}/{den}")

print("first lines of the drawing file:")
print("".join(io.write_drawing(d).splitlines(keepends=True)[:4]), end="")

if len(sys.argv) > 1:
    with open(sys.argv[1], "w", encoding="utf-8") as fh:
        fh.write(drawing_to_svg(d, scale=40, exact_labels=True))
    print("wrote", sys.argv[1])
