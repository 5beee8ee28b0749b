"""Line-oriented text formats for graphs, drawings and segment families.

Blank lines and lines starting with ``#`` are ignored everywhere.
Rationals are written as reduced ``p/q`` (``q`` omitted when 1).
"""
from __future__ import annotations

from .errors import ParseError
from .exactgeom import Point, Segment, format_rat, rat
from .graphs import DegenerateGraph, degeneracy_order
from .layout import ColoredDrawing, EdgeColor
from .arrangements.segments import ColoredSegmentFamily


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def _int(tok, no):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {no}: expected an integer, got {tok!r}") from None


def _rat(tok, no):
    if any(c in tok for c in ".eE"):
        raise ParseError(f"line {no}: {tok!r} is not an exact rational")
    try:
        return rat(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"line {no}: {tok!r} is not a rational") from None


def parse_graph(text: str) -> tuple:
    """``(n, edges, layers)``; ``layers`` is ``None`` when no tags are given."""
    n = None
    edges = []
    tags = {}
    for no, toks in _lines(text):
        kind, args = toks[0], toks[1:]
        if kind == "n" and len(args) == 1 and n is None:
            n = _int(args[0], no)
            if n < 0:
                raise ParseError(f"line {no}: negative vertex count")
        elif kind == "e" and len(args) == 2:
            edges.append((_int(args[0], no), _int(args[1], no)))
        elif kind == "l" and len(args) == 2:
            tags[_int(args[0], no)] = _int(args[1], no)
        else:
            raise ParseError(f"line {no}: cannot parse {' '.join(toks)!r}")
    if n is None:
        raise ParseError("missing 'n <count>' header")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range")
    layers = None
    if tags:
        if set(tags) != set(range(n)):
            raise ParseError("layer tags must cover every vertex or none")
        layers = tuple(tags[v] for v in range(n))
    return n, edges, layers


def read_graph(text: str) -> DegenerateGraph:
    """Parse a graph file and derive a 2-degeneracy order (may raise NotTwoDegenerate)."""
    n, edges, layers = parse_graph(text)
    g = degeneracy_order(n, edges)
    if layers is not None:
        g = DegenerateGraph(g.n, g.edges, g.order, g.preds, layers)
    return g


def write_graph(g: DegenerateGraph) -> str:
    out = [f"n {g.n}"]
    out += [f"e {u} {v}" for u, v in sorted(g.edges)]
    if g.layers is not None:
        out += [f"l {v} {tag}" for v, tag in enumerate(g.layers)]
    return "\n".join(out) + "\n"


def read_drawing(text: str) -> ColoredDrawing:
    pos, color = {}, {}
    for no, toks in _lines(text):
        kind, args = toks[0], toks[1:]
        if kind == "v" and len(args) == 3:
            v = _int(args[0], no)
            if v in pos:
                raise ParseError(f"line {no}: vertex {v} placed twice")
            pos[v] = Point(_rat(args[1], no), _rat(args[2], no))
        elif kind == "c" and len(args) == 3:
            u, w = _int(args[0], no), _int(args[1], no)
            try:
                c = EdgeColor(args[2])
            except ValueError:
                raise ParseError(f"line {no}: unknown colour {args[2]!r}") from None
            e = (min(u, w), max(u, w))
            if e in color:
                raise ParseError(f"line {no}: edge {e} coloured twice")
            color[e] = c
        else:
            raise ParseError(f"line {no}: cannot parse {' '.join(toks)!r}")
    for e in color:
        if e[0] not in pos or e[1] not in pos:
            raise ParseError(f"edge {e} has an unplaced endpoint")
    return ColoredDrawing(pos, color)


def write_drawing(d: ColoredDrawing) -> str:
    out = [f"v {v} {format_rat(p.x)} {format_rat(p.y)}" for v, p in sorted(d.pos.items())]
    out += [f"c {u} {w} {c.value}" for (u, w), c in sorted(d.color.items())]
    return "\n".join(out) + "\n"


def read_segments(text: str, require_disjoint: bool = False) -> ColoredSegmentFamily:
    red, blue = [], []
    for no, toks in _lines(text):
        kind, args = toks[0], toks[1:]
        if kind not in ("r", "b") or len(args) != 4:
            raise ParseError(f"line {no}: cannot parse {' '.join(toks)!r}")
        x1, y1, x2, y2 = (_rat(t, no) for t in args)
        if (x1, y1) == (x2, y2):
            raise ParseError(f"line {no}: degenerate segment")
        (red if kind == "r" else blue).append(Segment(Point(x1, y1), Point(x2, y2)))
    return ColoredSegmentFamily(red, blue, require_disjoint=require_disjoint)


def write_segments(f: ColoredSegmentFamily) -> str:
    out = []
    for kind, segs in (("r", f.red), ("b", f.blue)):
        for s in segs:
            out.append(f"{kind} " + " ".join(format_rat(c) for c in (s.a.x, s.a.y, s.b.x, s.b.y)))
    return "\n".join(out) + "\n"
