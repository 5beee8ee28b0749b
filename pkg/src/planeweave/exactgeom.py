"""Exact rational geometry kernel.

Every coordinate is a :data:`Rat` (a GMP rational).  No predicate here ever
touches a float: floats are rejected at the door by :func:`rat`.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, NamedTuple

from gmpy2 import mpq

from .errors import OverlapError, PreconditionError

Rat = mpq
_RAT = type(mpq(0))


def rat(value) -> mpq:
    """Coerce ints, ``"p/q"`` strings, Fractions and mpq values to :data:`Rat`."""
    if isinstance(value, _RAT):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing to build an exact rational from {value!r}")
    if isinstance(value, (int, Fraction)):
        return mpq(value)
    if isinstance(value, str):
        return mpq(value.strip())
    # other gmpy2 numbers (mpz) and numbers.Rational implementations
    return mpq(value)


def format_rat(value) -> str:
    """Reduced ``p/q`` string, ``q`` omitted when it is 1."""
    value = rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Point(NamedTuple):
    x: mpq
    y: mpq

    def __repr__(self):
        return f"({format_rat(self.x)}, {format_rat(self.y)})"


class Segment(NamedTuple):
    a: Point
    b: Point

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)


def point(x, y) -> Point:
    return Point(rat(x), rat(y))


def segment(a, b) -> Segment:
    """Build a segment from two points (or coordinate pairs); endpoints must differ."""
    a = a if isinstance(a, Point) else point(*a)
    b = b if isinstance(b, Point) else point(*b)
    if a == b:
        raise PreconditionError(f"degenerate segment at {a!r}")
    return Segment(a, b)


class Crossing(enum.Enum):
    PROPER = "proper"
    AT_ENDPOINT = "at-endpoint"
    # one segment's endpoint lies in the relative interior of the other
    TOUCH = "touch"
    NONE = "none"


def cross(p: Point, q: Point, r: Point) -> mpq:
    """Twice the signed area of the triangle ``pqr``."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 for a counterclockwise triple, -1 for clockwise, 0 when collinear."""
    d = cross(p, q, r)
    return (d > 0) - (d < 0)


def _boxes_disjoint(s: Segment, t: Segment) -> bool:
    sa, sb, ta, tb = s.a, s.b, t.a, t.b
    if max(sa.x, sb.x) < min(ta.x, tb.x) or max(ta.x, tb.x) < min(sa.x, sb.x):
        return True
    return max(sa.y, sb.y) < min(ta.y, tb.y) or max(ta.y, tb.y) < min(sa.y, sb.y)


def on_segment(p: Point, s: Segment) -> bool:
    """True when ``p`` lies on the closed segment ``s``."""
    if orientation(s.a, s.b, p) != 0:
        return False
    return (min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
            and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y))


def segments_cross(s: Segment, t: Segment) -> Crossing:
    """Classify how two closed segments meet.

    Raises :class:`OverlapError` if they share a collinear piece of positive
    length.
    """
    if _boxes_disjoint(s, t):
        return Crossing.NONE
    o1 = orientation(s.a, s.b, t.a)
    o2 = orientation(s.a, s.b, t.b)
    o3 = orientation(t.a, t.b, s.a)
    o4 = orientation(t.a, t.b, s.b)
    if o1 == o2 == o3 == o4 == 0:
        # collinear; boxes overlap, so parametrise along the dominant axis
        key = (lambda p: p.x) if s.a.x != s.b.x else (lambda p: p.y)
        lo = max(min(key(s.a), key(s.b)), min(key(t.a), key(t.b)))
        hi = min(max(key(s.a), key(s.b)), max(key(t.a), key(t.b)))
        if lo < hi:
            raise OverlapError(f"segments {s!r} and {t!r} overlap")
        return Crossing.AT_ENDPOINT if {s.a, s.b} & {t.a, t.b} else Crossing.TOUCH
    if o1 * o2 < 0 and o3 * o4 < 0:
        return Crossing.PROPER
    if s.a in (t.a, t.b) or s.b in (t.a, t.b):
        return Crossing.AT_ENDPOINT
    if (o1 == 0 and on_segment(t.a, s)) or (o2 == 0 and on_segment(t.b, s)) \
            or (o3 == 0 and on_segment(s.a, t)) or (o4 == 0 and on_segment(s.b, t)):
        return Crossing.TOUCH
    return Crossing.NONE


def segments_intersect(s: Segment, t: Segment) -> bool:
    """Closed segments share at least one point (overlaps count)."""
    try:
        return segments_cross(s, t) is not Crossing.NONE
    except OverlapError:
        return True


def intersection_point(s: Segment, t: Segment) -> Point:
    """Intersection of the supporting lines of two non-parallel segments."""
    d = (s.b.x - s.a.x) * (t.b.y - t.a.y) - (s.b.y - s.a.y) * (t.b.x - t.a.x)
    if d == 0:
        raise PreconditionError("parallel segments have no unique intersection")
    lam = ((t.a.x - s.a.x) * (t.b.y - t.a.y) - (t.a.y - s.a.y) * (t.b.x - t.a.x)) / d
    return Point(s.a.x + lam * (s.b.x - s.a.x), s.a.y + lam * (s.b.y - s.a.y))


def slanted_horizontal_meet(u: Point, m, v: Point) -> Point:
    """Meet of the slope-``m`` line through ``u`` with the horizontal line through ``v``."""
    m = rat(m)
    if m <= 0:
        raise PreconditionError(f"slope must be positive, got {m}")
    if u.y >= v.y:
        raise PreconditionError("u must lie strictly below v")
    return Point(u.x + (v.y - u.y) / m, v.y)


def parallel_gap_vertical(u: Point, v: Point, m) -> mpq:
    """Vertical distance between the parallel slope-``m`` lines through ``u`` and ``v``.

    This is the Euclidean distance times sqrt(1 + m^2); callers compare
    against it instead of taking square roots.
    """
    m = rat(m)
    return abs(v.y - u.y - m * (v.x - u.x))


def squared_distance(p: Point, q: Point) -> mpq:
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Counterclockwise hull from the lowest-leftmost vertex; collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and orientation(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def in_convex_position(points: Iterable[Point]) -> bool:
    """Every point is a strict hull vertex (no point inside or on a hull edge)."""
    pts = list(points)
    if len(set(pts)) != len(pts):
        return False
    if len(pts) <= 2:
        return True
    if len(pts) == 3:
        return orientation(*pts) != 0
    return len(convex_hull(pts)) == len(pts)


def point_in_polygon(p: Point, polygon: list[Point]) -> int:
    """Winding-style location test: 1 inside, 0 on the boundary, -1 outside.

    Works for any simple polygon; orientation of ``polygon`` is irrelevant.
    """
    n = len(polygon)
    winding = 0
    for i in range(n):
        a, b = polygon[i], polygon[(i + 1) % n]
        if a == b:
            continue
        if on_segment(p, Segment(a, b)):
            return 0
        if a.y <= p.y:
            if b.y > p.y and cross(a, b, p) > 0:
                winding += 1
        elif b.y <= p.y and cross(a, b, p) < 0:
            winding -= 1
    return 1 if winding else -1


def segment_in_polygon(s: Segment, polygon: list[Point]) -> bool:
    """Closed segment contained in the closed simple polygon."""
    cuts = {s.a, s.b}
    n = len(polygon)
    for i in range(n):
        a, b = polygon[i], polygon[(i + 1) % n]
        if a == b:
            continue
        edge = Segment(a, b)
        try:
            kind = segments_cross(s, edge)
        except OverlapError:
            # a piece of s runs along the boundary; cut at the overlap ends
            cuts.update(q for q in (a, b) if on_segment(q, s))
            continue
        if kind is Crossing.PROPER:
            return False
        if kind is not Crossing.NONE:
            cuts.update(q for q in (a, b, s.a, s.b) if on_segment(q, s) and on_segment(q, edge))
    if s.a.x != s.b.x:
        ordered = sorted(cuts, key=lambda q: q.x if s.a.x < s.b.x else -q.x)
    else:
        ordered = sorted(cuts, key=lambda q: q.y if s.a.y < s.b.y else -q.y)
    if point_in_polygon(ordered[0], polygon) < 0:
        return False
    for p, q in zip(ordered, ordered[1:]):
        mid = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
        if point_in_polygon(mid, polygon) < 0 or point_in_polygon(q, polygon) < 0:
            return False
    return True
