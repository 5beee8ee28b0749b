"""Independent checks for coloured drawings.

Nothing here calls into :mod:`planeweave.layout` beyond its data types; the
checks re-derive every property from coordinates, colours and the graph.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from gmpy2 import mpq

from .errors import ShapeMismatch
from .exactgeom import Crossing, Point, Segment, segments_cross
from .graphs import DegenerateGraph, heights
from .layout import ColoredDrawing, EdgeColor

DEFAULT_EXACT_LIMIT = 60
CONSTRAINTS = ("C1", "C2", "C3", "C4", "C5", "C6")


@dataclass(frozen=True)
class ConstraintResult:
    passed: bool
    witness: object = None


@dataclass
class FeasibilityReport:
    results: dict = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(r.passed for r in self.results.values())

    def lines(self) -> list[str]:
        out = []
        for name in CONSTRAINTS:
            r = self.results[name]
            line = f"{name} {'PASS' if r.passed else 'FAIL'}"
            if not r.passed and r.witness is not None:
                line += f" {r.witness}"
            out.append(line)
        out.append(f"OVERALL {'PASS' if self.overall else 'FAIL'}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _segment(d: ColoredDrawing, e) -> Segment:
    return Segment(d.pos[e[0]], d.pos[e[1]])


def monochromatic_crossings(d: ColoredDrawing) -> list:
    by_color: dict = {}
    for e, c in d.color.items():
        by_color.setdefault(c, []).append(e)
    found = []
    for c in EdgeColor:
        edges = sorted(by_color.get(c, []))
        segs = [_segment(d, e) for e in edges]
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if segments_cross(segs[i], segs[j]) is Crossing.PROPER:
                    found.append((edges[i], edges[j]))
    return found


def color_class_is_forest(d: ColoredDrawing, c: EdgeColor) -> bool:
    parent: dict = {}

    def find(v):
        parent.setdefault(v, v)
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (u, v), col in d.color.items():
        if col is not c:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _hits_right_ray(origin: Point, s: Segment) -> bool:
    a, b = s
    y = origin.y
    if a.y == b.y:
        return a.y == y and max(a.x, b.x) >= origin.x
    if not min(a.y, b.y) <= y <= max(a.y, b.y):
        return False
    x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y)
    return x >= origin.x


def _hits_down_ray(origin: Point, s: Segment) -> bool:
    # mirror of the right ray: swap axes and flip the direction
    a, b = s
    flip = lambda p: Point(-p.y, p.x)
    return _hits_right_ray(Point(-origin.y, origin.x), Segment(flip(a), flip(b)))


def _open_check(d: ColoredDrawing, c: EdgeColor, hits) -> ConstraintResult:
    edges = d.edges_of(c)
    segs = [_segment(d, e) for e in edges]
    for v in sorted(d.pos):
        origin = d.pos[v]
        for e, s in zip(edges, segs):
            if v in e:
                continue
            if hits(origin, s):
                return ConstraintResult(False, (v, e))
    return ConstraintResult(True)


def check_feasible(d: ColoredDrawing, g: DegenerateGraph, k: Optional[int] = None) -> FeasibilityReport:
    """Check constraints C1-C6 for the part of ``g`` with height at most ``k``.

    ``k`` defaults to the height of ``g``.  Raises :class:`ShapeMismatch` if the
    drawing does not cover exactly those vertices and their edges.
    """
    hm = heights(g)
    if k is None:
        k = hm.top
    h = hm.height
    verts = {v for v in range(g.n) if h[v] <= k}
    if set(d.pos) != verts:
        raise ShapeMismatch(f"drawing has {len(d.pos)} vertices, graph part has {len(verts)}")
    edges = {e for e in g.edges if e[0] in verts and e[1] in verts}
    if set(d.color) != edges:
        raise ShapeMismatch("drawing colours a different edge set than the graph")
    report = FeasibilityReport()

    # C1: predecessor edges coloured differently; top level uses h and hs
    res = ConstraintResult(True)
    for v in sorted(verts):
        cols = [d.color[(min(p, v), max(p, v))] for p in g.preds[v]]
        if len(set(cols)) != len(cols):
            res = ConstraintResult(False, v)
            break
        if k > 0 and h[v] == k:
            allowed = {EdgeColor.H, EdgeColor.HS}
            if not set(cols) <= allowed or (len(cols) == 2 and set(cols) != allowed):
                res = ConstraintResult(False, v)
                break
    report.results["C1"] = res

    # C2: some vertical line separates the top level from everything else
    low = [v for v in verts if h[v] < k]
    top = [v for v in verts if h[v] == k]
    res = ConstraintResult(True)
    if low and top:
        lv = max(low, key=lambda v: d.pos[v].x)
        tv = min(top, key=lambda v: d.pos[v].x)
        if not d.pos[lv].x < d.pos[tv].x:
            res = ConstraintResult(False, (lv, tv))
    report.results["C2"] = res

    bad = monochromatic_crossings(d)
    report.results["C3"] = ConstraintResult(not bad, bad[0] if bad else None)

    res = ConstraintResult(True)
    for axis in (0, 1):
        ordered = sorted(verts, key=lambda v: d.pos[v][axis])
        for a, b in zip(ordered, ordered[1:]):
            if d.pos[a][axis] == d.pos[b][axis]:
                res = ConstraintResult(False, (a, b))
                break
        if not res.passed:
            break
    report.results["C4"] = res

    report.results["C5"] = _open_check(d, EdgeColor.H, _hits_right_ray)
    report.results["C6"] = _open_check(d, EdgeColor.V, _hits_down_ray)
    return report


# -- perturbation validators -------------------------------------------------

def slope_violations(d: ColoredDrawing, m) -> list:
    """Ordered pairs ``(u, v)``, ``y(u) < y(v)``, whose meet is not right of the drawing."""
    m = mpq(m)
    x_max = max(p.x for p in d.pos.values())
    bad = []
    for u, pu in d.pos.items():
        for v, pv in d.pos.items():
            if pu.y < pv.y and not pu.x + (pv.y - pu.y) / m > x_max:
                bad.append((u, v))
    return bad


def epsilon_violations(d: ColoredDrawing, m, eps) -> dict:
    """First violation of each epsilon condition, keyed ``"ii"``, ``"iii"``, ``"iv"``.

    The line-distance condition is checked against the true Euclidean
    distance by squaring: ``eps < gap / sqrt(1+m^2)`` iff
    ``eps^2 (1+m^2) < gap^2``.  The meet-point condition is checked on
    sorted abscissae, which covers every pair by transitivity.
    """
    m, eps = mpq(m), mpq(eps)
    items = sorted(d.pos.items())
    out = {"ii": None, "iii": None, "iv": None}
    for i, (u, pu) in enumerate(items):
        for v, pv in items[i + 1:]:
            if out["ii"] is None and not eps < abs(pu.y - pv.y):
                out["ii"] = (u, v)
            gap = pv.y - pu.y - m * (pv.x - pu.x)
            if out["iv"] is None and gap != 0 and not eps * eps * (1 + m * m) < gap * gap:
                out["iv"] = (u, v)
    meets = sorted((pu.x + (pv.y - pu.y) / m, u, v)
                   for u, pu in items for v, pv in items if u != v)
    for (x1, *a), (x2, *b) in zip(meets, meets[1:]):
        if x1 != x2 and not eps < x2 - x1:
            out["iii"] = (tuple(a), tuple(b))
            break
    return out


def placement_violations(reflected: ColoredDrawing, schedule, placed: ColoredDrawing, m, eps) -> list:
    """New vertices not strictly bottom-right of their meet point, off its
    perpendicular, or not at strictly decreasing distance below ``eps / 2^r``."""
    m, eps = mpq(m), mpq(eps)
    bad = []
    previous = None
    for r, w in enumerate(schedule.sequence, start=1):
        hit = schedule.intersections[schedule.assignment[w][0]]
        p, q = hit.point, placed.pos[w]
        dx, dy = q.x - p.x, q.y - p.y
        dist2 = dx * dx + dy * dy
        limit = eps / 2**r
        ok = dx > 0 and dy < 0 and dx + m * dy == 0 and dist2 < limit * limit
        if previous is not None and not dist2 < previous:
            ok = False
        previous = dist2
        u, v = hit.slanted_source, hit.horizontal_source
        if not reflected.pos[u].y < reflected.pos[v].y:
            ok = False
        if not ok:
            bad.append(w)
    return bad


# -- conflict graphs and fixed-drawing decompositions -----------------------

@dataclass(frozen=True)
class ConflictGraph:
    nodes: tuple
    adj: tuple

    def __len__(self):
        return len(self.nodes)

    def pairs(self) -> list:
        return [(self.nodes[i], self.nodes[j])
                for i in range(len(self.nodes)) for j in sorted(self.adj[i]) if i < j]


@dataclass(frozen=True)
class Decomposition:
    count: int
    coloring: dict
    exact: bool


def build_conflict_graph(positions: dict, edges) -> ConflictGraph:
    """One node per edge; two nodes adjacent iff their segments cross properly."""
    nodes = tuple(sorted((min(e), max(e)) for e in edges))
    segs = [Segment(positions[u], positions[v]) for u, v in nodes]
    adj = [set() for _ in nodes]
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if segments_cross(segs[i], segs[j]) is Crossing.PROPER:
                adj[i].add(j)
                adj[j].add(i)
    return ConflictGraph(nodes, tuple(frozenset(a) for a in adj))


def _dsatur_greedy(adj) -> list:
    n = len(adj)
    colors = [-1] * n
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0),
                key=lambda u: (len({colors[w] for w in adj[u] if colors[w] >= 0}), len(adj[u]), -u))
        taken = {colors[w] for w in adj[v]}
        colors[v] = next(c for c in range(n + 1) if c not in taken)
    return colors


def _greedy_clique(adj) -> int:
    best = 1 if adj else 0
    for start in range(len(adj)):
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(cand, key=lambda u: (len(adj[u] & cand), -u))
            clique.append(v)
            cand &= adj[v]
        best = max(best, len(clique))
    return best


def _exact_chromatic(adj) -> list:
    """DSATUR branch and bound."""
    n = len(adj)
    best = _dsatur_greedy(adj)
    best_k = max(best) + 1
    lower = _greedy_clique(adj)
    if best_k <= lower:
        return best
    colors = [-1] * n

    def search(colored: int, used: int) -> bool:
        nonlocal best, best_k
        if used >= best_k:
            return False
        if colored == n:
            best, best_k = list(colors), used
            return best_k <= lower
        v = max((u for u in range(n) if colors[u] < 0),
                key=lambda u: (len({colors[w] for w in adj[u] if colors[w] >= 0}), len(adj[u])))
        taken = {colors[w] for w in adj[v]}
        for c in range(min(used + 1, best_k - 1)):
            if c in taken:
                continue
            colors[v] = c
            if search(colored + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    search(0, 0)
    return best


def min_plane_decomposition(cg: ConflictGraph, exact_limit: int = DEFAULT_EXACT_LIMIT) -> Decomposition:
    """Fewest plane colour classes for the fixed drawing (chromatic number of ``cg``).

    Exact when ``cg`` has at most ``exact_limit`` nodes, DSATUR upper bound otherwise.
    """
    if not cg.nodes:
        return Decomposition(0, {}, True)
    exact = len(cg) <= exact_limit
    colors = _exact_chromatic(cg.adj) if exact else _dsatur_greedy(cg.adj)
    return Decomposition(max(colors) + 1, dict(zip(cg.nodes, colors)), exact)


class _UnionFind:
    """Union by size without path compression, so unions can be undone."""

    def __init__(self):
        self.parent: dict = {}
        self.size: dict = {}
        self.history: list = []

    def find(self, v):
        while v in self.parent:
            v = self.parent[v]
        return v

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if self.size.get(ra, 1) < self.size.get(rb, 1):
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] = self.size.get(ra, 1) + self.size.get(rb, 1)
        self.history.append((ra, rb))

    def undo(self):
        ra, rb = self.history.pop()
        del self.parent[rb]
        self.size[ra] -= self.size.get(rb, 1)


def _forest_coloring(nodes, adj, k: int, order=None) -> Optional[list]:
    """Colour ``nodes`` (edges) with ``k`` classes: conflict-free and acyclic per class."""
    n = len(nodes)
    colors = [-1] * n
    forests = [_UnionFind() for _ in range(k)]

    def options(i):
        u, v = nodes[i]
        taken = {colors[j] for j in adj[i]}
        return [c for c in range(k) if c not in taken and forests[c].find(u) != forests[c].find(v)]

    def search(colored: int, used: int) -> bool:
        if colored == n:
            return True
        best_i, best_opts = None, None
        for i in range(n):
            if colors[i] >= 0:
                continue
            opts = options(i)
            if not opts:
                return False
            if best_opts is None or len(opts) < len(best_opts):
                best_i, best_opts = i, opts
        u, v = nodes[best_i]
        for c in best_opts:
            if c > used:
                break
            colors[best_i] = c
            forests[c].union(u, v)
            if search(colored + 1, max(used, c + 1)):
                return True
            forests[c].undo()
            colors[best_i] = -1
        return False

    return list(colors) if search(0, 0) else None


def _greedy_forest_coloring(nodes, adj) -> list:
    colors = [-1] * len(nodes)
    forests: list = []
    order = sorted(range(len(nodes)), key=lambda i: -len(adj[i]))
    for i in order:
        u, v = nodes[i]
        taken = {colors[j] for j in adj[i]}
        for c in range(len(forests) + 1):
            if c == len(forests):
                forests.append(_UnionFind())
            if c not in taken and forests[c].find(u) != forests[c].find(v):
                colors[i] = c
                forests[c].union(u, v)
                break
    return colors


def _arboricity_lower_bound(edges) -> int:
    """ceil(|E| / (|V| - 1)) maximised over connected components."""
    comp: dict = {}

    def find(v):
        comp.setdefault(v, v)
        while comp[v] != v:
            comp[v] = comp[comp[v]]
            v = comp[v]
        return v

    for u, v in edges:
        comp[find(u)] = find(v)
    sizes: dict = {}
    for u, v in edges:
        r = find(u)
        sizes.setdefault(r, [set(), 0])
        sizes[r][0].update((u, v))
        sizes[r][1] += 1
    return max((math.ceil(m / (len(vs) - 1)) for vs, m in sizes.values()), default=0)


def min_plane_forest_decomposition(d: ColoredDrawing, exact_limit: int = DEFAULT_EXACT_LIMIT) -> Decomposition:
    """Fewest classes that are each crossing-free and acyclic in the fixed drawing."""
    cg = build_conflict_graph(d.pos, d.color)
    if not cg.nodes:
        return Decomposition(0, {}, True)
    greedy = _greedy_forest_coloring(cg.nodes, cg.adj)
    upper = max(greedy) + 1
    if len(cg) > exact_limit:
        return Decomposition(upper, dict(zip(cg.nodes, greedy)), False)
    lower = max(_arboricity_lower_bound(cg.nodes), min_plane_decomposition(cg, exact_limit).count)
    best = greedy
    for k in range(lower, upper):
        found = _forest_coloring(cg.nodes, cg.adj, k)
        if found is not None:
            best = found
            break
    return Decomposition(max(best) + 1, dict(zip(cg.nodes, best)), True)
