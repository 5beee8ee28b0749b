"""Convex position, Q-edge types, tidy drawings and grid corridors."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from ..errors import CollinearInput, InvalidCertificate, OverlapError, PreconditionError
from ..exactgeom import (Crossing, Point, Segment, convex_hull, in_convex_position, orientation,
                         point_in_polygon, segment_in_polygon, segments_cross)
from .segments import ColoredSegmentFamily, GridCertificate, _param_along, is_grid_equivalent


def _check_general_position(points) -> None:
    for p, q, r in combinations(points, 3):
        if orientation(p, q, r) == 0:
            raise CollinearInput(f"{p!r}, {q!r}, {r!r} are collinear")


def max_convex_subset(points) -> list[Point]:
    """Largest subset in convex position, as a counterclockwise polygon.

    For every choice of lowest vertex the remaining points are sorted by
    angle and a dynamic program over ordered pairs grows convex chains.
    """
    pts = sorted(set(points))
    if len(pts) != len(points):
        raise CollinearInput("repeated point")
    _check_general_position(pts)
    best = pts[:2]
    for anchor in pts:
        above = [q for q in pts if (q.y, q.x) > (anchor.y, anchor.x)]
        if len(above) < 2:
            continue
        # sort counterclockwise around the anchor; all lie in a half-plane
        above.sort(key=lambda q: _AngleKey(anchor, q))
        m = len(above)
        length = {}
        parent = {}
        for j in range(m):
            for l in range(j + 1, m):
                length[j, l] = 3
                parent[j, l] = None
                for i in range(j):
                    if (i, j) in length and orientation(above[i], above[j], above[l]) > 0:
                        if length[i, j] + 1 > length[j, l]:
                            length[j, l] = length[i, j] + 1
                            parent[j, l] = i
        for (j, l), size in length.items():
            if size > len(best) and orientation(above[j], above[l], anchor) > 0:
                chain = [l, j]
                state = (j, l)
                while parent[state] is not None:
                    i = parent[state]
                    chain.append(i)
                    state = (i, state[0])
                best = [anchor] + [above[i] for i in reversed(chain)]
    return best


class _AngleKey:
    """Counterclockwise order of points in the open upper half-plane of ``origin``."""

    __slots__ = ("o", "p")

    def __init__(self, origin, p):
        self.o, self.p = origin, p

    def __lt__(self, other):
        return orientation(self.o, self.p, other.p) > 0


def convex_position_subset(points, k: int) -> Optional[list[Point]]:
    """Some ``k`` of ``points`` in convex position, or ``None`` if the maximum is smaller."""
    points = list(points)
    best = max_convex_subset(points)
    if len(best) < k:
        return None
    return best[:k]


class QType(enum.Enum):
    L = "TypeL"
    R = "TypeR"
    I = "TypeI"
    E = "TypeE"

    def __str__(self):
        return self.value


def classify_Q_edge(Q, e: Segment) -> QType:
    """Type of the Q-edge ``e`` relative to the convex counterclockwise chain ``Q``.

    The segment leaves ``q_i`` and exits the hull through ``q_j q_{j+1}``:
    L when ``j < i - 1``, R when ``j > i``, I through the closing side
    ``q_1 q_k``, and E when it never enters the interior (1-based indices).
    """
    Q = list(Q)
    k = len(Q)
    if k < 3 or not in_convex_position(Q):
        raise PreconditionError("Q must be at least three points in convex position")
    if any(orientation(Q[i], Q[(i + 1) % k], Q[(i + 2) % k]) <= 0 for i in range(k)):
        raise PreconditionError("Q must be listed counterclockwise")
    if e.a in Q:
        qi, far = e.a, e.b
    elif e.b in Q:
        qi, far = e.b, e.a
    else:
        raise PreconditionError("edge has no endpoint in Q")
    if point_in_polygon(far, Q) >= 0:
        raise PreconditionError("far endpoint lies in the hull of Q")
    i = Q.index(qi)
    exits = []
    for j in range(k):
        a, b = Q[j], Q[(j + 1) % k]
        if i in (j, (j + 1) % k):
            continue
        try:
            kind = segments_cross(e, Segment(a, b))
        except OverlapError:
            raise PreconditionError("edge runs along the hull boundary") from None
        if kind is Crossing.PROPER:
            exits.append(j)
        elif kind is not Crossing.NONE:
            raise PreconditionError("edge passes through a vertex of Q")
    if not exits:
        return QType.E
    j = exits[0]
    if j == k - 1:
        return QType.I
    # 0-based: side j joins q_{j+1}, q_{j+2} in 1-based terms
    return QType.L if j < i else QType.R


def separated(A, B) -> bool:
    """``A`` and ``B`` in common convex position and contiguous along the hull."""
    A, B = list(A), list(B)
    if set(A) & set(B):
        return False
    allpts = A + B
    if not in_convex_position(allpts):
        return False
    hull = convex_hull(allpts) if len(allpts) >= 3 else allpts
    aset = set(A)
    labels = [p in aset for p in hull]
    changes = sum(labels[i] != labels[i - 1] for i in range(len(labels)))
    return changes <= 2


def _conflict(s: Segment, t: Segment) -> bool:
    try:
        kind = segments_cross(s, t)
    except OverlapError:
        return True
    return kind in (Crossing.PROPER, Crossing.TOUCH)


def is_tidy(A, B, subdivision_edges) -> bool:
    """Check a drawing of a 1-subdivided complete bipartite graph for tidiness.

    ``subdivision_edges`` holds ``(base, c)`` pairs where ``base`` is in
    ``A`` or ``B`` and ``c`` is a subdivision point.  Tidy means ``A`` and
    ``B`` are separated and no two A-edges (or two B-edges) cross.
    """
    A, B = list(A), list(B)
    if not separated(A, B):
        return False
    aset, bset = set(A), set(B)
    groups = {True: [], False: []}
    for base, c in subdivision_edges:
        if base not in aset and base not in bset:
            raise PreconditionError(f"{base!r} is neither in A nor in B")
        groups[base in aset].append(Segment(base, c))
    for segs in groups.values():
        if any(_conflict(s, t) for s, t in combinations(segs, 2)):
            return False
    return True


@dataclass(frozen=True)
class GridContext:
    corridor_a: dict
    corridor_b: dict
    tidy_grid: bool
    dotted: bool
    a_side: tuple
    b_side: tuple
    x_a: tuple
    x_b: tuple


def _hull_order(A, B) -> dict:
    """Position of each point of A and B along the counterclockwise hull, A first."""
    allpts = list(A) + list(B)
    hull = convex_hull(allpts)
    aset = set(A)
    n = len(hull)
    start = next((i for i in range(n) if hull[i] in aset and hull[i - 1] not in aset), 0)
    return {hull[(start + i) % n]: i for i in range(n)}


def _side(segs: dict, base_set) -> dict:
    out = {}
    for idx, s in segs.items():
        ends = [p for p in (s.a, s.b) if p in base_set]
        if len(ends) != 1:
            raise InvalidCertificate(f"segment {idx} needs exactly one endpoint on its side")
        out[idx] = Segment(ends[0], s.b if ends[0] == s.a else s.a)
    return out


def _far_crossings(oriented: dict, others: dict, order) -> tuple:
    pts = []
    for idx in order:
        s = oriented[idx]
        t = max((_param_along(s, o) for o in others.values()))
        pts.append(Point(s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)))
    return tuple(pts)


def grid_context(cert: GridCertificate, f: ColoredSegmentFamily, A, B, subdivision_points) -> GridContext:
    """Corridors, tidiness and dottedness of a grid with red side in ``A`` and blue side in ``B``.

    Corridor ``(i, j)`` (0-based, ``i < j``) is the polygon through the far
    crossing of side vertex ``i``, side vertices ``i..j`` and the far
    crossing of side vertex ``j``.  A cell is the intersection of adjacent
    A- and B-corridors; the grid is dotted when every cell has a
    subdivision point strictly inside both.
    """
    if not is_grid_equivalent(cert, f):
        raise InvalidCertificate("certificate does not describe a grid")
    A, B = list(A), list(B)
    if not separated(A, B):
        raise PreconditionError("A and B must be separated")
    reds = _side({i: f.red[i] for i in cert.red_idx}, set(A))
    blues = _side({j: f.blue[j] for j in cert.blue_idx}, set(B))
    pos = _hull_order(A, B)
    red_order = sorted(reds, key=lambda i: pos[reds[i].a])
    blue_order = sorted(blues, key=lambda j: pos[blues[j].a])
    a_side = tuple(reds[i].a for i in red_order)
    b_side = tuple(blues[j].a for j in blue_order)
    x_a = _far_crossings(reds, blues, red_order)
    x_b = _far_crossings(blues, reds, blue_order)
    k = len(a_side)

    def corridors(side, xs):
        return {(i, j): [xs[i]] + list(side[i:j + 1]) + [xs[j]]
                for i in range(k) for j in range(i + 1, k)}

    corridor_a = corridors(a_side, x_a)
    corridor_b = corridors(b_side, x_b)
    tidy = True
    if k >= 2:
        full_a, full_b = corridor_a[0, k - 1], corridor_b[0, k - 1]
        tidy = all(segment_in_polygon(Segment(a_side[i], x_a[i]), full_a) for i in range(k)) \
            and all(segment_in_polygon(Segment(b_side[i], x_b[i]), full_b) for i in range(k))
    pts = list(subdivision_points)
    dotted = all(
        any(point_in_polygon(p, corridor_a[i, i + 1]) > 0 and point_in_polygon(p, corridor_b[j, j + 1]) > 0
            for p in pts)
        for i in range(k - 1) for j in range(k - 1)
    )
    return GridContext(corridor_a, corridor_b, tidy, dotted, a_side, b_side, x_a, x_b)
