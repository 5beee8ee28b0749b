import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from planeweave.arrangements import (find_quadrant_hub, gamma_graph, is_admissible, is_quadrant_hub,
                                     monochromatic_biclique, pairwise_crossing_edges)
from planeweave.errors import IncompleteColoring, PreconditionError
from planeweave.exactgeom import Crossing, Segment, orientation, point, segments_cross


def _brute_biclique(colors, nA, nB, k):
    for A in combinations(range(nA), k):
        for B in combinations(range(nB), k):
            cs = {colors[a, b] for a in A for b in B}
            if len(cs) == 1:
                return True
    return False


def test_biclique_examples():
    ones = {(a, b): 1 for a in range(3) for b in range(4)}
    A, B, c = monochromatic_biclique(ones, 3, 4, 2)
    assert len(A) == len(B) == 2 and c == 1
    with pytest.raises(IncompleteColoring):
        monochromatic_biclique({(0, 0): 1}, 2, 2, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(2, 6), st.integers(1, 3), st.integers(2, 3), st.integers(0, 10**6))
def test_biclique_matches_brute_force(nA, nB, k, r, seed):
    rng = random.Random(seed)
    colors = {(a, b): rng.randint(1, r) for a in range(nA) for b in range(nB)}
    found = monochromatic_biclique(colors, nA, nB, k)
    assert (found is not None) == _brute_biclique(colors, nA, nB, k)
    if found:
        A, B, c = found
        assert all(colors[a, b] == c for a in A for b in B)


def test_gamma_examples():
    g = gamma_graph(2, 1)
    assert g.vertex_count == 4
    assert len(g.edges()) == 2
    assert len(gamma_graph(1, 5).edges()) == 0
    g = gamma_graph(5, 4)
    assert {len(g.neighbors(v)) for v in range(g.vertex_count)} == {64}
    assert g.cells[(2, 3)] == tuple(g.vertices_of(2, 3))
    with pytest.raises(PreconditionError):
        gamma_graph(0, 1)


@given(st.integers(1, 4), st.integers(1, 3))
def test_gamma_adjacency_rule(k, t):
    g = gamma_graph(k, t)
    for u, v in combinations(range(g.vertex_count), 2):
        (i, j), (p, q) = g.cell(u), g.cell(v)
        assert g.adjacent(u, v) == (i != p and j != q)
    assert len(g.edges()) == sum(g.adjacent(u, v) for u, v in combinations(range(g.vertex_count), 2))


def test_admissible_examples():
    g = gamma_graph(4, 2)
    r = 4
    assert is_admissible(g, {e: r for e in g.edges()}, r) == (True, None)
    u, v, w = g.vertices_of(1, 1)[0], g.vertices_of(2, 2)[0], g.vertices_of(3, 3)[0]
    coloring = {e: r for e in g.edges()}
    coloring[u, v] = coloring[v, w] = 3
    ok, witness = is_admissible(g, coloring, r)
    assert not ok and witness == ("path", 3, (u, v, w))
    # Gamma(4, t) has no K5, so any {1, 2} colouring is admissible
    rng = random.Random(3)
    assert is_admissible(g, {e: rng.choice((1, 2)) for e in g.edges()}, r)[0]
    with pytest.raises(IncompleteColoring):
        is_admissible(g, {}, r)
    with pytest.raises(IncompleteColoring):
        is_admissible(g, {e: 9 for e in g.edges()}, r)


def test_admissible_rejects_planted_k5():
    g = gamma_graph(5, 1)
    clique = [g.vertices_of(i, i)[0] for i in range(1, 6)]
    coloring = {e: 6 for e in g.edges()}
    for e in combinations(clique, 2):
        coloring[e] = 1
    ok, witness = is_admissible(g, coloring, 6)
    assert not ok and witness[0] == "K5" and witness[1] == 1 and set(witness[2]) == set(clique)


def _brute_hub(g, coloring, r, cell):
    ci, cj = cell
    for v in g.vertices_of(ci, cj):
        quads = set()
        for u in range(g.vertex_count):
            p, q = g.cell(u)
            if p != ci and q != cj and coloring[min(u, v), max(u, v)] == r:
                quads.add((p < ci, q < cj))
        if len(quads) < 4:
            return False
    return True


def test_hub_examples():
    g = gamma_graph(3, 1)
    full = {e: 2 for e in g.edges()}
    assert is_quadrant_hub(g, full, 2, (2, 2))
    assert not is_quadrant_hub(g, full, 2, (1, 1))
    assert find_quadrant_hub(g, full, 2) == (2, 2)
    assert find_quadrant_hub(g, {e: 1 for e in g.edges()}, 2) is None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.floats(0.3, 1.0))
def test_hub_matches_brute_force(seed, p):
    rng = random.Random(seed)
    g = gamma_graph(4, 2)
    coloring = {e: (3 if rng.random() < p else 1) for e in g.edges()}
    hub = find_quadrant_hub(g, coloring, 3)
    expected = next((c for c in product(range(1, 5), repeat=2) if _brute_hub(g, coloring, 3, c)), None)
    assert hub == expected


def _brute_crossing(pos, edges, k):
    segs = {e: Segment(pos[e[0]], pos[e[1]]) for e in edges}
    for sub in combinations(edges, k):
        if all(segments_cross(segs[a], segs[b]) is Crossing.PROPER for a, b in combinations(sub, 2)):
            return True
    return False


def test_pairwise_crossing_examples():
    ring = [(10, 0), (8, 6), (3, 9), (-3, 9), (-8, 6), (-10, 0), (-8, -6), (-3, -9), (3, -9), (8, -6)]
    pos = {i: point(*c) for i, c in enumerate(ring)}
    chords = [(i, i + 5) for i in range(5)]
    found = pairwise_crossing_edges(pos, chords + [(0, 1), (1, 2)], 5)
    assert found == frozenset(chords)
    assert len({v for e in found for v in e}) == 10
    square = {i: point(*c) for i, c in enumerate([(0, 0), (2, 0), (2, 2), (0, 2)])}
    assert pairwise_crossing_edges(square, [(0, 1), (1, 2), (2, 3), (0, 3)], 2) is None
    with pytest.raises(PreconditionError):
        pairwise_crossing_edges(square, [], 0)


def test_pairwise_crossing_random_k5():
    rng = random.Random(55)
    done = 0
    while done < 30:
        pts = [point(rng.randint(0, 20), rng.randint(0, 20)) for _ in range(5)]
        if len(set(pts)) < 5:
            continue
        if any(orientation(a, b, c) == 0 for a, b, c in combinations(pts, 3)):
            continue
        done += 1
        pos = dict(enumerate(pts))
        edges = list(combinations(range(5), 2))
        for k in (1, 2, 3):
            assert (pairwise_crossing_edges(pos, edges, k) is not None) == _brute_crossing(pos, edges, k)
