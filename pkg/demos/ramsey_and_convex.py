"""Convex position, bipartite Ramsey and the grid blow-up graph.

Run:  python3 demos/ramsey_and_convex.py
"""
import random
from itertools import product

from gmpy2 import mpq

from planeweave.arrangements import (find_quadrant_hub, gamma_graph, is_admissible, max_convex_subset,
                                     monochromatic_biclique)
from planeweave.exactgeom import Point

rng = random.Random(7)

# Largest subset in convex position among 14 random points in general position.
pts = []
while len(pts) < 14:
    p = Point(mpq(rng.randint(-40, 40)), mpq(rng.randint(-40, 40)))
    if p in pts:
        continue
    if any((b.x - a.x) * (p.y - a.y) == (b.y - a.y) * (p.x - a.x) for i, a in enumerate(pts) for b in pts[i + 1:]):
        continue
    pts.append(p)
best = max_convex_subset(pts)
print(f"{len(best)} of {len(pts)} points in convex position:", best)

# A 2-colouring of K_{36,36} always has a monochromatic K_{2,2}.
colors = {(a, b): rng.randint(1, 2) for a, b in product(range(36), repeat=2)}
A, B, c = monochromatic_biclique(colors, 36, 36, 2)
print(f"monochromatic K_2,2 in colour {c}: A={A}, B={B}")

# Gamma(4, 2): 16 cells of two vertices; cells are joined when they share
# neither row nor column.  Mostly colour r with some noise in colours 1, 2.
g = gamma_graph(4, 2)
r = 5
coloring = {e: (r if rng.random() < 0.8 else rng.choice((1, 2))) for e in g.edges()}
print("admissible:", is_admissible(g, coloring, r)[0])
print("quadrant hub:", find_quadrant_hub(g, coloring, r))

# A monotone two-edge path in a middle colour breaks admissibility.
u, v, w = g.vertices_of(1, 1)[0], g.vertices_of(2, 2)[0], g.vertices_of(4, 3)[0]
coloring[u, v] = coloring[v, w] = 3
print("after planting a path in colour 3:", is_admissible(g, coloring, r))
