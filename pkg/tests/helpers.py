"""Random instance generators and brute-force oracles shared by the tests."""
from __future__ import annotations

import random
from itertools import combinations

from gmpy2 import mpq

from planeweave.arrangements import ColoredSegmentFamily
from planeweave.errors import PreconditionError
from planeweave.exactgeom import (Point, Segment, in_convex_position, intersection_point, point_in_polygon,
                                  segments_intersect)


def rpoint(rng: random.Random, lo=-100, hi=100) -> Point:
    return Point(mpq(rng.randint(lo, hi)), mpq(rng.randint(lo, hi)))


def random_line(rng: random.Random, lo=-100, hi=100) -> Segment:
    a = rpoint(rng, lo, hi)
    while True:
        dx, dy = rng.randint(-50, 50), rng.randint(-50, 50)
        if (dx, dy) != (0, 0):
            return Segment(a, Point(a.x + dx, a.y + dy))


def _span(line: Segment, others, margin) -> Segment:
    """Piece of ``line`` covering its crossings with ``others``, padded by ``margin``."""
    pts = [intersection_point(line, o) for o in others]
    key = (lambda p: p.x) if line.a.x != line.b.x else (lambda p: p.y)
    lo, hi = min(pts, key=key), max(pts, key=key)
    dx, dy = hi.x - lo.x, hi.y - lo.y
    if dx == 0 and dy == 0:
        dx, dy = line.b.x - line.a.x, line.b.y - line.a.y
    return Segment(Point(lo.x - margin * dx, lo.y - margin * dy), Point(hi.x + margin * dx, hi.y + margin * dy))


def random_all_crossing_small(rng: random.Random, nr: int, nb: int) -> ColoredSegmentFamily:
    """Rejection sampling over random lines trimmed to their crossings (small sizes only)."""
    while True:
        reds, blues = [random_line(rng) for _ in range(nr)], [random_line(rng) for _ in range(nb)]
        margin = mpq(rng.randint(1, 30), 100)
        try:
            f = ColoredSegmentFamily([_span(r, blues, margin) for r in reds],
                                     [_span(b, reds, margin) for b in blues])
        except PreconditionError:
            continue
        if f.is_all_crossing():
            return f


def _inside(p: Point, r) -> bool:
    return -r <= p.x <= r and -r <= p.y <= r


def random_all_crossing(rng: random.Random, nr: int, nb: int) -> ColoredSegmentFamily:
    """Incremental sampler for larger families.

    Blue lines meet each other outside the box ``[-150, 150]^2``; red lines
    are kept when all their blue crossings lie in ``[-100, 100]^2`` and the
    trimmed red misses every earlier red.
    """
    margin = mpq(1, 50)
    while True:
        found = _try_all_crossing(rng, nr, nb, margin)
        if found is not None:
            return found


def _try_all_crossing(rng, nr, nb, margin, attempts=3000):
    blue_lines: list = []
    while len(blue_lines) < nb:
        cand = random_line(rng)
        try:
            if all(not _inside(intersection_point(cand, b), 150) for b in blue_lines):
                blue_lines.append(cand)
        except PreconditionError:
            continue
    reds, red_lines = [], []
    for _ in range(attempts):
        if len(reds) == nr:
            break
        line = random_line(rng)
        try:
            pts = [intersection_point(line, b) for b in blue_lines]
        except PreconditionError:
            continue
        if not all(_inside(p, 100) for p in pts):
            continue
        seg = _span(line, blue_lines, margin)
        if any(segments_intersect(seg, r) for r in reds):
            continue
        reds.append(seg)
        red_lines.append(line)
    if len(reds) < nr:
        return None
    blues = [_span(b, red_lines, margin) for b in blue_lines]
    return ColoredSegmentFamily(reds, blues)


def random_two_two(rng: random.Random):
    """Four segments through the corners of a random quadrilateral, or ``None`` if invalid.

    Corners x11, x12, x22, x21 are the crossings r1b1, r1b2, r2b2, r2b1; each
    segment is its corner-to-corner piece extended by random amounts.
    """
    c = [rpoint(rng, -20, 20) for _ in range(4)]
    if len(set(c)) < 4:
        return None

    def through(p, q):
        s, t = mpq(rng.randint(0, 150), 100), mpq(rng.randint(0, 150), 100)
        dx, dy = q.x - p.x, q.y - p.y
        return Segment(Point(p.x - s * dx, p.y - s * dy), Point(q.x + t * dx, q.y + t * dy))

    x11, x12, x22, x21 = c
    return through(x11, x12), through(x21, x22), through(x11, x21), through(x12, x22)


def two_two_oracle(r1, r2, b1, b2) -> str:
    """Face-structure oracle: the cell bounded by the four segments is convex
    (no segment end pokes into it) for type I; type II has two ends inside."""
    x11, x12 = intersection_point(r1, b1), intersection_point(r1, b2)
    x21, x22 = intersection_point(r2, b1), intersection_point(r2, b2)
    cell = [x11, x12, x22, x21]
    inside = sum(point_in_polygon(p, cell) > 0 for s in (r1, r2, b1, b2) for p in s)
    if inside == 0:
        assert in_convex_position(cell)
        return "TypeI"
    assert inside == 2 and not in_convex_position(cell)
    return "TypeII"


def brute_force_max_convex(points) -> int:
    pts = list(points)
    for size in range(len(pts), 0, -1):
        if any(in_convex_position(sub) for sub in combinations(pts, size)):
            return size
    return 0


def general_position_points(rng: random.Random, n: int, lo=-50, hi=50) -> list:
    from planeweave.exactgeom import orientation
    pts: list = []
    while len(pts) < n:
        p = rpoint(rng, lo, hi)
        if p in pts or any(orientation(a, b, p) == 0 for a, b in combinations(pts, 2)):
            continue
        pts.append(p)
    return pts
