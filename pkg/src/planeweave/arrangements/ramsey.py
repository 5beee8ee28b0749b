"""Ramsey-type searches at desk scale: bicliques, the grid blow-up, crossing cliques."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from ..errors import IncompleteColoring, PreconditionError
from ..verify import build_conflict_graph


def monochromatic_biclique(colors: dict, nA: int, nB: int, k: int) -> Optional[tuple]:
    """A monochromatic K_{k,k} in an edge-coloured K_{nA,nB}: ``(A, B, colour)`` or ``None``.

    ``colors`` maps ``(a, b)`` with ``0 <= a < nA`` and ``0 <= b < nB`` to a colour.
    """
    for a in range(nA):
        for b in range(nB):
            if (a, b) not in colors:
                raise IncompleteColoring(f"edge ({a}, {b}) has no colour")
    if k < 1:
        raise PreconditionError("k must be positive")
    for c in sorted(set(colors.values())):
        nbrs = [frozenset(b for b in range(nB) if colors[a, b] == c) for a in range(nA)]
        cand = [a for a in range(nA) if len(nbrs[a]) >= k]

        def extend(chosen, common, start):
            if len(chosen) == k:
                return tuple(chosen), tuple(sorted(common)[:k])
            for pos in range(start, len(cand)):
                a = cand[pos]
                rest = common & nbrs[a]
                if len(rest) >= k:
                    found = extend(chosen + [a], rest, pos + 1)
                    if found:
                        return found
            return None

        found = extend([], frozenset(range(nB)), 0)
        if found:
            return found[0], found[1], c
    return None


@dataclass(frozen=True)
class GammaGraph:
    """Blow-up of a k x k index grid: cell ``(i, j)`` (1-based) holds ``t`` vertices.

    Vertices in cells ``(i, j)`` and ``(p, q)`` are adjacent iff ``i != p`` and ``j != q``.
    """

    k: int
    t: int

    @property
    def cells(self) -> dict:
        return {(i, j): tuple(self.vertices_of(i, j)) for i in range(1, self.k + 1) for j in range(1, self.k + 1)}

    def vertices_of(self, i: int, j: int) -> range:
        start = ((i - 1) * self.k + (j - 1)) * self.t
        return range(start, start + self.t)

    def cell(self, v: int) -> tuple:
        c = v // self.t
        return c // self.k + 1, c % self.k + 1

    @property
    def vertex_count(self) -> int:
        return self.k * self.k * self.t

    def adjacent(self, u: int, v: int) -> bool:
        (i, j), (p, q) = self.cell(u), self.cell(v)
        return i != p and j != q

    def neighbors(self, v: int) -> list:
        i, j = self.cell(v)
        return [u for p in range(1, self.k + 1) for q in range(1, self.k + 1)
                if p != i and q != j for u in self.vertices_of(p, q)]

    def edges(self) -> list:
        return [(u, v) for u in range(self.vertex_count) for v in self.neighbors(u) if u < v]


def gamma_graph(k: int, t: int) -> GammaGraph:
    if k < 1 or t < 1:
        raise PreconditionError("k and t must be positive")
    return GammaGraph(k, t)


def _colour(coloring: dict, u: int, v: int):
    return coloring[(u, v) if u < v else (v, u)]


def _check_complete(g: GammaGraph, coloring: dict, r: int) -> None:
    for e in g.edges():
        c = coloring.get(e)
        if c is None:
            raise IncompleteColoring(f"edge {e} has no colour")
        if not 1 <= c <= r:
            raise IncompleteColoring(f"edge {e} has colour {c} outside 1..{r}")


def _mono_k5(g: GammaGraph, coloring: dict, c) -> Optional[tuple]:
    n = g.vertex_count
    adj = [set() for _ in range(n)]
    for u, v in g.edges():
        if coloring[u, v] == c:
            adj[u].add(v)
            adj[v].add(u)

    def grow(clique, cand):
        if len(clique) == 5:
            return tuple(clique)
        for v in sorted(cand):
            if v > clique[-1]:
                found = grow(clique + [v], cand & adj[v])
                if found:
                    return found
        return None

    for v in range(n):
        found = grow([v], adj[v])
        if found:
            return found
    return None


def is_admissible(g: GammaGraph, coloring: dict, r: int) -> tuple:
    """``(True, None)`` or ``(False, witness)``.

    Admissible: every monochromatic K5 has colour ``r``, and no path
    ``u v w`` is monochromatic in a colour ``3 <= c < r`` while ``v`` sits
    strictly between ``u`` and ``w`` in both grid indices.
    """
    _check_complete(g, coloring, r)
    for c in sorted(set(coloring.values())):
        if c == r:
            continue
        clique = _mono_k5(g, coloring, c)
        if clique:
            return False, ("K5", c, clique)
    for v in range(g.vertex_count):
        p, q = g.cell(v)
        by_colour: dict = {}
        for u in g.neighbors(v):
            c = _colour(coloring, u, v)
            if 3 <= c < r:
                by_colour.setdefault(c, []).append(u)
        for c, us in sorted(by_colour.items()):
            for u in us:
                i, j = g.cell(u)
                if i >= p:
                    continue
                for w in us:
                    x, y = g.cell(w)
                    if x > p and (j < q < y or y < q < j):
                        return False, ("path", c, (u, v, w))
    return True, None


def _quadrant(centre: tuple, cell: tuple) -> Optional[int]:
    (i, j), (p, q) = centre, cell
    if p == i or q == j:
        return None
    return (p > i) * 2 + (q > j)


def is_quadrant_hub(g: GammaGraph, coloring: dict, r: int, cell: tuple) -> bool:
    """Every vertex of ``cell`` has a colour-``r`` edge into each of the four quadrants."""
    for v in g.vertices_of(*cell):
        seen = set()
        for u in g.neighbors(v):
            if _colour(coloring, u, v) == r:
                seen.add(_quadrant(cell, g.cell(u)))
        if len(seen) < 4:
            return False
    return True


def find_quadrant_hub(g: GammaGraph, coloring: dict, r: int) -> Optional[tuple]:
    """First cell (lexicographic) that is a quadrant hub for colour ``r``."""
    _check_complete(g, coloring, r)
    for cell in product(range(1, g.k + 1), repeat=2):
        if is_quadrant_hub(g, coloring, r, cell):
            return cell
    return None


def pairwise_crossing_edges(positions: dict, edges, k: int) -> Optional[frozenset]:
    """``k`` independent edges whose segments cross pairwise, or ``None``.

    Properly crossing segments never share an endpoint, so a k-clique in the
    conflict graph is automatically independent.
    """
    if k < 1:
        raise PreconditionError("k must be positive")
    cg = build_conflict_graph(positions, edges)
    n = len(cg.nodes)

    def grow(clique, cand):
        if len(clique) == k:
            return clique
        for v in sorted(cand):
            if len(clique) + len(cand) < k:
                return None
            found = grow(clique + [v], {u for u in cand & cg.adj[v] if u > v})
            if found:
                return found
        return None

    found = grow([], set(range(n)))
    return None if found is None else frozenset(cg.nodes[i] for i in found)
