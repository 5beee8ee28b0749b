"""Grids inside red/blue segment arrangements.

Run:  python3 demos/grids.py
"""
import random

from planeweave.arrangements import (ColoredSegmentFamily, canonical_grid, classify_two_two, crossing_vector,
                                     exhaustive_grid, find_k_grid, generate_no_grid_family, is_grid_equivalent)
from planeweave.exactgeom import segment

# Two red and two blue segments that cross pairwise form one of two shapes.
grid = canonical_grid(2)
print("axis grid:", classify_two_two(*grid.red, *grid.blue))
pinwheel = (segment((-1, 0), (5, 0)), segment(("-1/2", "11/2"), ("7/6", "1/2")),
            segment((0, -1), (0, 5)), segment(("11/2", "-1/2"), ("1/2", "7/6")))
print("pinwheel:", classify_two_two(*pinwheel))

# With k * 2^(k-1) reds every red sees the first k blues with one of
# 2^(k-1) crossing vectors, so k of them agree and give a k-grid.
rng = random.Random(1)


def random_family():
    # long reds through a small window all cross three steep blues
    reds = []
    for y in range(12):
        dy = rng.randint(-1, 1)
        reds.append(segment((-60, 4 * y - dy), (60, 4 * y + dy)))
    blues = [segment((x - rng.randint(-2, 2), -20), (x + rng.randint(-2, 2), 70)) for x in (-10, 0, 10)]
    return ColoredSegmentFamily(reds, blues)


f = random_family()
print("crossing vectors of the first four reds:", [crossing_vector(f, i, (0, 1, 2)) for i in range(4)])
cert = find_k_grid(f, 3)
print(f"3-grid: reds {cert.red_idx}, blues {cert.blue_idx}, valid={is_grid_equivalent(cert, f)}")

# Three bundles per colour, k parallel segments each: every red crosses
# every blue, yet no (k+1)-grid appears.  Parallel segments must overlap
# other bundles of the same colour, so the family is not colour-disjoint.
k = 2
nogk = generate_no_grid_family(k)
print(f"{len(nogk.red)}+{len(nogk.blue)} family all-crossing={nogk.is_all_crossing()}")
print(f"  exhaustive {k + 1}-grid search:", exhaustive_grid(nogk, k + 1))
found = exhaustive_grid(nogk, k)
print(f"  a {k}-grid: reds {found.red_idx}, blues {found.blue_idx}")
