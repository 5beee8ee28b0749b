"""Red/blue segment families, 2x2 classification and k-grid certificates."""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from gmpy2 import mpq

from ..errors import NotAllCrossing, OverlapError, PreconditionError
from ..exactgeom import Crossing, Point, Segment, segments_cross, segments_intersect

log = logging.getLogger(__name__)

EXHAUSTIVE_PAIR_LIMIT = 10**4


class TwoTwo(enum.Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    INVALID = "Invalid"

    def __str__(self):
        return self.value


def _crosses(s: Segment, t: Segment) -> bool:
    try:
        return segments_cross(s, t) is Crossing.PROPER
    except OverlapError:
        return False


def _disjoint(segs) -> bool:
    return not any(segments_intersect(s, t) for s, t in combinations(segs, 2))


@dataclass(frozen=True)
class ColoredSegmentFamily:
    """Red and blue segments.

    Same-coloured segments must be pairwise disjoint unless
    ``require_disjoint`` is switched off.
    """

    red: tuple
    blue: tuple
    require_disjoint: bool = True

    def __post_init__(self):
        object.__setattr__(self, "red", tuple(self.red))
        object.__setattr__(self, "blue", tuple(self.blue))
        if self.require_disjoint:
            for name, segs in (("red", self.red), ("blue", self.blue)):
                for (i, s), (j, t) in combinations(enumerate(segs), 2):
                    if segments_intersect(s, t):
                        raise PreconditionError(f"{name} segments {i} and {j} intersect")

    def crosses(self, i: int, j: int) -> bool:
        return _crosses(self.red[i], self.blue[j])

    def first_non_crossing(self) -> Optional[tuple]:
        for i in range(len(self.red)):
            for j in range(len(self.blue)):
                if not self.crosses(i, j):
                    return i, j
        return None

    def is_all_crossing(self) -> bool:
        return self.first_non_crossing() is None


def _direction(s: Segment) -> tuple:
    return s.b.x - s.a.x, s.b.y - s.a.y


def crossing_sign(r: Segment, b: Segment) -> int:
    """+1 if ``b`` crosses ``r`` from right to left (seen along ``r``), else -1."""
    (rx, ry), (bx, by) = _direction(r), _direction(b)
    d = rx * by - ry * bx
    return (d > 0) - (d < 0)


def classify_two_two(r1: Segment, r2: Segment, b1: Segment, b2: Segment) -> TwoTwo:
    """Type of an arrangement of two red and two blue segments.

    Valid arrangements (disjoint reds, disjoint blues, four proper
    crossings) come in two kinds.  Type I is the grid: the product of the
    four crossing signs is +1, a quantity that does not depend on how the
    segments are oriented.
    """
    if segments_intersect(r1, r2) or segments_intersect(b1, b2):
        return TwoTwo.INVALID
    if not all(_crosses(r, b) for r in (r1, r2) for b in (b1, b2)):
        return TwoTwo.INVALID
    prod = crossing_sign(r1, b1) * crossing_sign(r1, b2) * crossing_sign(r2, b1) * crossing_sign(r2, b2)
    return TwoTwo.TYPE_I if prod > 0 else TwoTwo.TYPE_II


@dataclass(frozen=True)
class GridCertificate:
    """Selected red and blue indices plus the common crossing orders.

    ``cross_order_red`` lists the selected blue indices in the order they
    are met along every selected red (up to reversal, stored as the
    lexicographically smaller direction); ``cross_order_blue`` likewise.
    """

    red_idx: tuple
    blue_idx: tuple
    cross_order_red: tuple
    cross_order_blue: tuple

    @property
    def k(self) -> int:
        return len(self.red_idx)


def _param_along(s: Segment, t: Segment) -> mpq:
    """Parameter along ``s`` of its crossing with ``t`` (0 at ``s.a``, 1 at ``s.b``)."""
    (sx, sy), (tx, ty) = _direction(s), _direction(t)
    d = sx * ty - sy * tx
    return ((t.a.x - s.a.x) * ty - (t.a.y - s.a.y) * tx) / d


def _order_along(s: Segment, others: dict) -> tuple:
    return tuple(sorted(others, key=lambda j: _param_along(s, others[j])))


def _canonical(seq: tuple) -> tuple:
    rev = seq[::-1]
    return min(seq, rev)


def _grid_orders(reds: dict, blues: dict) -> Optional[tuple]:
    """Common canonical crossing orders if the selection forms a grid, else ``None``."""
    if not _disjoint(reds.values()) or not _disjoint(blues.values()):
        return None
    if not all(_crosses(r, b) for r in reds.values() for b in blues.values()):
        return None
    sigma = tau = None
    oriented_r, oriented_b = {}, {}
    for i, r in reds.items():
        seq = _order_along(r, blues)
        if sigma is None:
            sigma = _canonical(seq)
        if seq == sigma:
            oriented_r[i] = r
        elif seq[::-1] == sigma:
            oriented_r[i] = r.reversed()
        else:
            return None
    for j, b in blues.items():
        seq = _order_along(b, reds)
        if tau is None:
            tau = _canonical(seq)
        if seq == tau:
            oriented_b[j] = b
        elif seq[::-1] == tau:
            oriented_b[j] = b.reversed()
        else:
            return None
    signs = {crossing_sign(r, b) for r in oriented_r.values() for b in oriented_b.values()}
    if len(signs) != 1:
        return None
    return sigma, tau


def is_grid_equivalent(cert: GridCertificate, f: ColoredSegmentFamily) -> bool:
    """Check that the certificate's segments form a grid like the axis-parallel one.

    Every selected red meets the selected blues in one common order (up to
    reversal), every blue meets the reds in one common order, and once the
    segments are oriented accordingly all crossings have the same sign.
    """
    k = len(cert.red_idx)
    if k == 0 or len(cert.blue_idx) != k:
        return False
    if len(set(cert.red_idx)) != k or len(set(cert.blue_idx)) != k:
        return False
    if not all(0 <= i < len(f.red) for i in cert.red_idx) or not all(0 <= j < len(f.blue) for j in cert.blue_idx):
        return False
    reds = {i: f.red[i] for i in cert.red_idx}
    blues = {j: f.blue[j] for j in cert.blue_idx}
    orders = _grid_orders(reds, blues)
    if orders is None:
        return False
    return orders == (tuple(cert.cross_order_red), tuple(cert.cross_order_blue))


def _certificate(f: ColoredSegmentFamily, red_idx, blue_idx) -> Optional[GridCertificate]:
    reds = {i: f.red[i] for i in red_idx}
    blues = {j: f.blue[j] for j in blue_idx}
    orders = _grid_orders(reds, blues)
    if orders is None:
        return None
    return GridCertificate(tuple(sorted(red_idx)), tuple(sorted(blue_idx)), *orders)


def crossing_vector(f: ColoredSegmentFamily, i: int, blue_idx) -> tuple:
    """Crossing signs of red ``i`` with the given blues, red oriented so the first is +1."""
    r = f.red[i]
    vec = tuple(crossing_sign(r, f.blue[j]) for j in blue_idx)
    return vec if vec[0] > 0 else tuple(-s for s in vec)


def _buckets(f: ColoredSegmentFamily, reds, blue_idx) -> dict:
    out: dict = {}
    for i in reds:
        out.setdefault(crossing_vector(f, i, blue_idx), []).append(i)
    return out


def pigeonhole_grid(f: ColoredSegmentFamily, k: int) -> Optional[GridCertificate]:
    """Bucket reds by crossing vector against the first ``k`` blues.

    With at least ``k * 2^(k-1)`` reds some bucket holds ``k`` of them, and
    reds sharing a crossing vector form a grid with those blues.
    """
    if len(f.blue) < k:
        return None
    blue_idx = tuple(range(k))
    for vec, reds in sorted(_buckets(f, range(len(f.red)), blue_idx).items()):
        if len(reds) >= k:
            cert = _certificate(f, reds[:k], blue_idx)
            if cert is not None:
                return cert
    return None


def _disjoint_subsets(segs: dict, k: int):
    """k-subsets (as sorted index tuples) of pairwise disjoint segments, lexicographic."""
    idx = sorted(segs)
    clash = {i: {j for j in idx if j != i and segments_intersect(segs[i], segs[j])} for i in idx}

    def extend(chosen, start):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for pos in range(start, len(idx)):
            i = idx[pos]
            if clash[i].isdisjoint(chosen):
                chosen.append(i)
                yield from extend(chosen, pos + 1)
                chosen.pop()

    yield from extend([], 0)


def exhaustive_grid(f: ColoredSegmentFamily, k: int) -> Optional[GridCertificate]:
    """Search every disjoint blue k-subset; ``None`` certifies that no k-grid exists.

    For a fixed blue subset, reds crossing all of them are bucketed by
    crossing vector; a grid needs its reds inside one bucket, and any
    pairwise disjoint k reds from one bucket are checked directly.
    """
    if k < 1 or k > min(len(f.red), len(f.blue)):
        return None
    blues = dict(enumerate(f.blue))
    for blue_idx in _disjoint_subsets(blues, k):
        reds = [i for i in range(len(f.red)) if all(f.crosses(i, j) for j in blue_idx)]
        for vec, bucket in sorted(_buckets(f, reds, blue_idx).items()):
            if len(bucket) < k:
                continue
            for red_idx in _disjoint_subsets({i: f.red[i] for i in bucket}, k):
                cert = _certificate(f, red_idx, blue_idx)
                if cert is not None:
                    return cert
    return None


def find_k_grid(f: ColoredSegmentFamily, k: int, pair_limit: int = EXHAUSTIVE_PAIR_LIMIT) -> Optional[GridCertificate]:
    """A k-grid in an all-crossing family.

    Runs the pigeonhole extraction first.  If that fails and the family has
    at most ``pair_limit`` red/blue pairs, an exhaustive search decides; a
    ``None`` from above that size is uncertified and logged as such.
    """
    bad = f.first_non_crossing()
    if bad is not None:
        raise NotAllCrossing(*bad)
    if k < 1:
        raise PreconditionError("k must be positive")
    cert = pigeonhole_grid(f, k)
    if cert is not None:
        return cert
    if len(f.red) * len(f.blue) <= pair_limit:
        return exhaustive_grid(f, k)
    log.warning("no %d-grid from pigeonhole; family too large for exhaustive search", k)
    return None


def canonical_grid(k: int) -> ColoredSegmentFamily:
    """Axis-parallel k-grid: horizontal reds at y = 1..k, vertical blues at x = 1..k."""
    red = [Segment(Point(mpq(0), mpq(i)), Point(mpq(k + 1), mpq(i))) for i in range(1, k + 1)]
    blue = [Segment(Point(mpq(j), mpq(0)), Point(mpq(j), mpq(k + 1))) for j in range(1, k + 1)]
    return ColoredSegmentFamily(red, blue)


# six directions, alternating red and blue, spread over a half-turn
_BUNDLE_DIRECTIONS = ((1, 0), (4, 1), (1, 1), (1, 4), (0, 1), (-1, 2))


def generate_no_grid_family(k: int) -> ColoredSegmentFamily:
    """3k red and 3k blue segments, every red crossing every blue, without a (k+1)-grid.

    Each colour has three bundles of ``k`` parallel segments with pairwise
    distinct slopes.  All segments are long and pass close to the origin, so
    any two segments of different slopes cross.  Disjoint same-coloured
    segments therefore come from a single bundle, which caps every grid at
    size ``k``.
    """
    if k < 1:
        raise PreconditionError("k must be positive")
    half_length = 8 * k + 8
    red, blue = [], []
    for b, (dx, dy) in enumerate(_BUNDLE_DIRECTIONS):
        # unit-ish normal offsets keep parallel segments apart
        nx, ny = -dy, dx
        for s in range(k):
            off = mpq(2 * s - (k - 1), 4 * k)
            cx, cy = off * nx, off * ny
            a = Point(cx - half_length * dx, cy - half_length * dy)
            c = Point(cx + half_length * dx, cy + half_length * dy)
            (red if b % 2 == 0 else blue).append(Segment(a, c))
    return ColoredSegmentFamily(red, blue, require_disjoint=False)
