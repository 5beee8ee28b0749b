"""Level-by-level construction of 4-coloured straight-line drawings.

The drawing of heights ``< k`` is reflected at the line ``x = -y`` (colours
h<->v and hs<->vs swap), after which the vertices of height ``k`` are placed
just below-right of the meeting points of slope-``m`` lines through their
lower predecessor and horizontal lines through their upper predecessor.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from gmpy2 import mpq

from .errors import DegenerateInput, PreconditionError
from .exactgeom import Point, slanted_horizontal_meet
from .graphs import DegenerateGraph, heights, normalize_predecessors


class EdgeColor(enum.Enum):
    H = "h"
    HS = "hs"
    V = "v"
    VS = "vs"

    @property
    def swapped(self) -> "EdgeColor":
        return _SWAP[self]

    def __str__(self):
        return self.value


_SWAP = {EdgeColor.H: EdgeColor.V, EdgeColor.V: EdgeColor.H,
         EdgeColor.HS: EdgeColor.VS, EdgeColor.VS: EdgeColor.HS}


@dataclass(frozen=True)
class ColoredDrawing:
    """Vertex positions plus an edge colouring.

    ``separator`` is the x-threshold splitting the top level from the rest.
    On a reflected drawing it is carried along negated, i.e. it then names
    the horizontal line ``y = separator`` below which the old top level sits.
    """

    pos: dict
    color: dict
    height: int = 0
    separator: Optional[mpq] = None

    def segment(self, edge):
        u, v = edge
        return self.pos[u], self.pos[v]

    def edges_of(self, c: EdgeColor) -> list:
        return sorted(e for e, col in self.color.items() if col is c)


@dataclass(frozen=True)
class Intersection:
    point: Point
    horizontal_source: int
    slanted_source: int


@dataclass(frozen=True)
class PlacementSchedule:
    intersections: tuple
    # vertex -> (index into intersections, 1-based rank among vertices sharing it)
    assignment: dict
    # all new vertices in placement order; global rank = position + 1
    sequence: tuple


@dataclass
class LevelTrace:
    level: int
    graph: DegenerateGraph
    reflected: Optional[ColoredDrawing]
    slope: Optional[mpq]
    epsilon: Optional[mpq]
    schedule: Optional[PlacementSchedule]
    drawing: ColoredDrawing
    notes: dict = field(default_factory=dict)


def reflect_and_swap(d: ColoredDrawing) -> ColoredDrawing:
    pos = {v: Point(-p.y, -p.x) for v, p in d.pos.items()}
    color = {e: c.swapped for e, c in d.color.items()}
    sep = None if d.separator is None else -d.separator
    return ColoredDrawing(pos, color, d.height, sep)


def choose_slope(d: ColoredDrawing) -> mpq:
    """Slope small enough that every slanted/horizontal meet lands right of the drawing.

    ``m = min vertical gap / (width + 1)``: for ``y(u) < y(v)`` the meet sits
    at ``x(u) + (y(v)-y(u))/m >= x_min + width + 1 > x_max``.
    """
    ys = sorted({p.y for p in d.pos.values()})
    if len(ys) < 2:
        raise DegenerateInput("need two vertices at different heights to choose a slope")
    gap = min(b - a for a, b in zip(ys, ys[1:]))
    xs = [p.x for p in d.pos.values()]
    return gap / (max(xs) - min(xs) + 1)


def _min_positive_gap(values) -> Optional[mpq]:
    vals = sorted(set(values))
    if len(vals) < 2:
        return None
    return min(b - a for a, b in zip(vals, vals[1:]))


def choose_epsilon(d: ColoredDrawing, m) -> mpq:
    """Half the smallest of the perturbation bounds.

    Candidates: vertical gaps between vertices; nonzero horizontal gaps
    between all slanted/horizontal meeting points; nonzero vertical gaps
    between parallel slope-``m`` lines through vertices, divided by
    ``max(2, 1 + m)`` so that they under-estimate the Euclidean distance.
    """
    m = mpq(m)
    pts = list(d.pos.values())
    if len(set(pts)) != len(pts):
        raise DegenerateInput("two vertices coincide")
    if len(pts) < 2:
        return mpq(1)
    ys = [p.y for p in pts]
    if len(set(ys)) != len(ys):
        raise DegenerateInput("two vertices share a y-coordinate")
    candidates = [_min_positive_gap(ys)]
    meets = [u.x + (v.y - u.y) / m for u in pts for v in pts if u is not v]
    candidates.append(_min_positive_gap(meets))
    line_gap = _min_positive_gap(p.y - m * p.x for p in pts)
    if line_gap is not None:
        candidates.append(line_gap / max(mpq(2), 1 + m))
    return min(c for c in candidates if c is not None) / 2


def build_schedule(d: ColoredDrawing, new_level, m) -> PlacementSchedule:
    """Order the meeting points bottom-to-top, then left-to-right.

    ``new_level`` holds ``(w, a, b)`` triples; ``a`` and ``b`` are swapped as
    needed so the slanted source is the lower predecessor.  Vertices sharing
    a meeting point are ranked by id.
    """
    groups: dict = {}
    for w, a, b in new_level:
        if a not in d.pos or b not in d.pos:
            raise PreconditionError(f"predecessor of {w} is not placed")
        u, v = (a, b) if d.pos[a].y < d.pos[b].y else (b, a)
        p = slanted_horizontal_meet(d.pos[u], m, d.pos[v])
        groups.setdefault((p.y, p.x, v, u), []).append(w)
    intersections = []
    assignment = {}
    sequence = []
    for i, key in enumerate(sorted(groups)):
        y, x, v, u = key
        intersections.append(Intersection(Point(x, y), v, u))
        for rank, w in enumerate(sorted(groups[key]), start=1):
            assignment[w] = (i, rank)
            sequence.append(w)
    return PlacementSchedule(tuple(intersections), assignment, tuple(sequence))


def place_level(d: ColoredDrawing, schedule: PlacementSchedule, m, eps, level: Optional[int] = None) -> ColoredDrawing:
    """Put the ``r``-th scheduled vertex at ``p + eps / (2^r (1+m)) * (m, -1)``."""
    m, eps = mpq(m), mpq(eps)
    pos = dict(d.pos)
    color = dict(d.color)
    step = eps / (1 + m)
    for r, w in enumerate(schedule.sequence, start=1):
        step /= 2
        i, _ = schedule.assignment[w]
        hit = schedule.intersections[i]
        pos[w] = Point(hit.point.x + step * m, hit.point.y - step)
        color[_key(w, hit.horizontal_source)] = EdgeColor.H
        color[_key(w, hit.slanted_source)] = EdgeColor.HS
    sep = max(p.x for p in d.pos.values())
    return ColoredDrawing(pos, color, d.height + 1 if level is None else level, sep)


def dyadic_floor(value) -> mpq:
    """Largest power of two not exceeding ``value`` (which must be positive)."""
    value = mpq(value)
    if value <= 0:
        raise PreconditionError("dyadic_floor needs a positive value")
    e = value.numerator.bit_length() - value.denominator.bit_length()
    cand = mpq(2) ** e if e >= 0 else mpq(1, 2 ** -e)
    while cand > value:
        cand /= 2
    return cand


def _key(a, b):
    return (a, b) if a < b else (b, a)


def base_drawing(vertices) -> ColoredDrawing:
    """Level 0: the i-th vertex (by id) at (i, i)."""
    pos = {v: Point(mpq(i), mpq(i)) for i, v in enumerate(sorted(vertices))}
    return ColoredDrawing(pos, {}, 0, mpq(-1))


def construct_drawing(g: DegenerateGraph, trace: Optional[list] = None, dyadic: bool = True) -> ColoredDrawing:
    """Feasible 4-coloured drawing of ``g``; append per-level records to ``trace`` if given.

    With ``dyadic`` set, the slope and epsilon of each level are rounded down
    to powers of two.  Both only need to be small enough, and the rounding
    keeps coordinate sizes close to the drawing's dynamic range instead of
    accumulating unrelated denominators.
    """
    work, dummy = normalize_predecessors(g)
    hm = heights(work)
    d = base_drawing(hm.levels[0]) if hm.levels else ColoredDrawing({}, {}, 0, None)
    if trace is not None:
        trace.append(LevelTrace(0, work, None, None, None, None, d))
    for k in range(1, len(hm.levels)):
        reflected = reflect_and_swap(d)
        m = choose_slope(reflected)
        if dyadic:
            m = dyadic_floor(m)
        eps = choose_epsilon(reflected, m)
        if dyadic:
            eps = dyadic_floor(eps)
        new_level = [(w, *work.preds[w]) for w in hm.levels[k]]
        schedule = build_schedule(reflected, new_level, m)
        d = place_level(reflected, schedule, m, eps, k)
        if trace is not None:
            trace.append(LevelTrace(k, work, reflected, m, eps, schedule, d))
    if dummy is not None:
        d = drop_vertex(d, dummy)
    return d


def drop_vertex(d: ColoredDrawing, v) -> ColoredDrawing:
    pos = {u: p for u, p in d.pos.items() if u != v}
    color = {e: c for e, c in d.color.items() if v not in e}
    return ColoredDrawing(pos, color, d.height, d.separator)


def coordinate_bits(d: ColoredDrawing) -> tuple[int, int]:
    """Largest numerator and denominator bit lengths over all coordinates."""
    num = den = 0
    for p in d.pos.values():
        for c in p:
            num = max(num, c.numerator.bit_length())
            den = max(den, c.denominator.bit_length())
    return num, den

