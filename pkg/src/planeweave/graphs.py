"""2-degenerate graphs: peeling orders, heights, dummy normalisation, generators."""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .errors import NotTwoDegenerate, PreconditionError, SizeOverflow, UnknownVertex

DEFAULT_VERTEX_CAP = 10**7
DEFAULT_MULTIPLICITY = 89


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class DegenerateGraph:
    """A graph together with a fixed 2-degeneracy (construction) order.

    ``preds[v]`` lists the earlier neighbours of ``v``; every edge is recorded
    exactly once, at its later endpoint.  ``layers`` optionally tags vertices
    (the Lambda index for the lower-bound family).
    """

    n: int
    edges: frozenset
    order: tuple
    preds: tuple
    layers: Optional[tuple] = None
    _rank: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if sorted(self.order) != list(range(self.n)):
            raise PreconditionError("order must be a permutation of the vertices")
        if len(self.preds) != self.n:
            raise PreconditionError("need one predecessor list per vertex")
        rank = [0] * self.n
        for i, v in enumerate(self.order):
            rank[v] = i
        seen = set()
        for v, ps in enumerate(self.preds):
            if len(ps) > 2:
                raise PreconditionError(f"vertex {v} has {len(ps)} predecessors")
            for p in ps:
                if p == v:
                    raise PreconditionError(f"self-loop at {v}")
                if rank[p] >= rank[v]:
                    raise PreconditionError(f"predecessor {p} of {v} comes later in the order")
                e = _edge(p, v)
                if e in seen:
                    raise PreconditionError(f"edge {e} recorded twice")
                seen.add(e)
        if seen != set(self.edges):
            raise PreconditionError("predecessor lists do not match the edge set")
        if self.layers is not None and len(self.layers) != self.n:
            raise PreconditionError("layer tags must cover every vertex")
        object.__setattr__(self, "_rank", tuple(rank))

    @classmethod
    def from_preds(cls, preds, order=None, layers=None) -> "DegenerateGraph":
        preds = tuple(tuple(ps) for ps in preds)
        n = len(preds)
        edges = frozenset(_edge(p, v) for v, ps in enumerate(preds) for p in ps)
        order = tuple(range(n)) if order is None else tuple(order)
        return cls(n, edges, order, preds, None if layers is None else tuple(layers))

    def rank(self, v: int) -> int:
        return self._rank[v]

    def neighbors(self) -> list[set]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def layer_sizes(self) -> list[int]:
        if self.layers is None:
            return []
        sizes = [0] * (max(self.layers) + 1 if self.layers else 0)
        for tag in self.layers:
            sizes[tag] += 1
        return sizes


@dataclass(frozen=True)
class HeightMap:
    height: tuple
    levels: tuple

    @property
    def top(self) -> int:
        return len(self.levels) - 1


def _check_simple(n: int, edges) -> set:
    out = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise PreconditionError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise PreconditionError(f"self-loop at {u}")
        e = _edge(u, v)
        if e in out:
            raise PreconditionError(f"parallel edge {e}")
        out.add(e)
    return out


def degeneracy_order(n: int, edges: Iterable) -> DegenerateGraph:
    """Peel vertices of degree <= 2 (smallest id first) and reverse the removal order."""
    edge_set = _check_simple(n, edges)
    adj = [set() for _ in range(n)]
    for u, v in edge_set:
        adj[u].add(v)
        adj[v].add(u)
    degree = [len(a) for a in adj]
    heap = [v for v in range(n) if degree[v] <= 2]
    heapq.heapify(heap)
    removed = [False] * n
    peeled = []
    while heap:
        v = heapq.heappop(heap)
        if removed[v] or degree[v] > 2:
            continue
        removed[v] = True
        peeled.append(v)
        for w in adj[v]:
            if not removed[w]:
                degree[w] -= 1
                if degree[w] <= 2:
                    heapq.heappush(heap, w)
    if len(peeled) < n:
        raise NotTwoDegenerate(v for v in range(n) if not removed[v])
    order = peeled[::-1]
    rank = {v: i for i, v in enumerate(order)}
    preds = [tuple(sorted(w for w in adj[v] if rank[w] < rank[v])) for v in range(n)]
    return DegenerateGraph(n, frozenset(edge_set), tuple(order), tuple(preds))


def heights(g: DegenerateGraph) -> HeightMap:
    h = [0] * g.n
    for v in g.order:
        ps = g.preds[v]
        h[v] = 1 + max(h[p] for p in ps) if ps else 0
    levels = [[] for _ in range(max(h, default=-1) + 1)]
    for v in range(g.n):
        levels[h[v]].append(v)
    return HeightMap(tuple(h), tuple(tuple(level) for level in levels))


def normalize_predecessors(g: DegenerateGraph):
    """Give every single-predecessor vertex a shared dummy as second predecessor.

    Returns ``(graph, dummy_id)``; ``dummy_id`` is ``None`` when nothing needed
    patching.  The dummy gets the next free id and goes first in the order.
    """
    needy = [v for v in range(g.n) if len(g.preds[v]) == 1]
    if not needy:
        return g, None
    dummy = g.n
    preds = list(g.preds) + [()]
    for v in needy:
        preds[v] = (preds[v][0], dummy)
    layers = None if g.layers is None else g.layers + (-1,)
    edges = g.edges | {(v, dummy) for v in needy}
    return DegenerateGraph(g.n + 1, frozenset(edges), (dummy,) + g.order, tuple(preds), layers), dummy


def strip_dummy(g: DegenerateGraph, dummy_id: Optional[int]) -> DegenerateGraph:
    """Remove the dummy vertex (and its edges); ids above it shift down by one."""
    if dummy_id is None:
        return g
    if not 0 <= dummy_id < g.n:
        raise UnknownVertex(dummy_id)

    def shift(v):
        return v - 1 if v > dummy_id else v

    preds = [tuple(shift(p) for p in ps if p != dummy_id)
             for v, ps in enumerate(g.preds) if v != dummy_id]
    order = [shift(v) for v in g.order if v != dummy_id]
    layers = None
    if g.layers is not None:
        layers = [tag for v, tag in enumerate(g.layers) if v != dummy_id]
    return DegenerateGraph.from_preds(preds, order, layers)


def lower_bound_layer_sizes(n: int, multiplicity: int = DEFAULT_MULTIPLICITY) -> list[int]:
    l1 = comb(n, 2)
    l2 = multiplicity * comb(l1, 2)
    return [n, l1, l2, comb(l2, 2)]


def generate_lower_bound_graph(n: int, multiplicity: int = DEFAULT_MULTIPLICITY,
                               cap: int = DEFAULT_VERTEX_CAP) -> DegenerateGraph:
    """The lower-bound family G(n).

    Layer 0 has ``n`` vertices; every pair in layer 0 gets one common new
    neighbour (layer 1), every pair in layer 1 gets ``multiplicity`` common
    new neighbours (layer 2), every pair in layer 2 gets one (layer 3).
    """
    if n < 2 or multiplicity < 1:
        raise PreconditionError("need n >= 2 and multiplicity >= 1")
    sizes = lower_bound_layer_sizes(n, multiplicity)
    if sum(sizes) > cap:
        raise SizeOverflow(f"G({n}) with multiplicity {multiplicity} has {sum(sizes)} vertices (cap {cap})")
    preds: list[tuple] = [()] * n
    layers = [0] * n
    previous = range(n)
    for tag, copies in ((1, 1), (2, multiplicity), (3, 1)):
        start = len(preds)
        for pair in combinations(previous, 2):
            preds.extend([pair] * copies)
        layers.extend([tag] * (len(preds) - start))
        previous = range(start, len(preds))
    return DegenerateGraph.from_preds(preds, layers=layers)


def random_2degenerate(n: int, seed: int, sparse_prob: float = 0.1) -> DegenerateGraph:
    """Random graph built by attaching each new vertex to earlier ones.

    From the third vertex on, a vertex takes two distinct uniform earlier
    predecessors; with probability ``sparse_prob`` it takes one or none
    instead (split evenly), which exercises dummy normalisation.
    """
    if n < 1:
        raise PreconditionError("need at least one vertex")
    rng = random.Random(seed)
    preds: list[tuple] = []
    for v in range(n):
        if v == 0:
            preds.append(())
            continue
        roll = rng.random()
        if roll < sparse_prob / 2:
            preds.append(())
        elif roll < sparse_prob or v == 1:
            preds.append((rng.randrange(v),))
        else:
            preds.append(tuple(sorted(rng.sample(range(v), 2))))
    return DegenerateGraph.from_preds(preds)
