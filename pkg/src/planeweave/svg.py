"""SVG rendering of coloured drawings.  Floats appear only in the picture."""
from __future__ import annotations

from xml.sax.saxutils import escape

from gmpy2 import mpq

from .exactgeom import format_rat
from .layout import ColoredDrawing, EdgeColor

# larger pictures are shrunk by a power of two to fit
MAX_EXTENT = 10**6

_STROKES = {EdgeColor.H: "#d62728", EdgeColor.HS: "#ff7f0e", EdgeColor.V: "#1f77b4", EdgeColor.VS: "#2ca02c"}


def drawing_to_svg(d: ColoredDrawing, scale: float = 100.0, exact_labels: bool = False, margin: float = 20.0) -> str:
    # offsets are formed exactly and only then rounded, so huge coordinates
    # with a small spread still render
    k = mpq(scale)
    xs = [p.x for p in d.pos.values()] or [mpq(0)]
    ys = [p.y for p in d.pos.values()] or [mpq(0)]
    x0, y1 = min(xs), max(ys)
    spread = max(max(xs) - x0, y1 - min(ys))
    shrink = 0
    while spread * k > MAX_EXTENT:
        k /= 2
        shrink += 1
    width = float((max(xs) - x0) * k) + 2 * margin
    height = float((y1 - min(ys)) * k) + 2 * margin

    def sx(v):
        return float((v - x0) * k) + margin

    def sy(v):
        # SVG y grows downwards
        return float((y1 - v) * k) + margin

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" height="{height:.2f}" '
           f'viewBox="0 0 {width:.2f} {height:.2f}">',
           "<style>"]
    if shrink:
        out.insert(1, f"<!-- scale reduced by 2^{shrink} to fit {MAX_EXTENT} units -->")
    out += [f".{c.value} {{ stroke: {col}; stroke-width: 1.5; fill: none; }}" for c, col in _STROKES.items()]
    out += [".vertex { fill: black; } .label { font: 9px sans-serif; }", "</style>"]
    for (u, w), c in sorted(d.color.items()):
        a, b = d.pos[u], d.pos[w]
        out.append(f'<polyline class="{c.value}" points="{sx(a.x):.4f},{sy(a.y):.4f} {sx(b.x):.4f},{sy(b.y):.4f}"/>')
    for v, p in sorted(d.pos.items()):
        out.append(f'<circle class="vertex" cx="{sx(p.x):.4f}" cy="{sy(p.y):.4f}" r="2.5"><title>{v}</title></circle>')
        if exact_labels:
            text = escape(f"{v}: ({format_rat(p.x)}, {format_rat(p.y)})")
            out.append(f'<text class="label" x="{sx(p.x) + 4:.4f}" y="{sy(p.y) - 4:.4f}">{text}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
