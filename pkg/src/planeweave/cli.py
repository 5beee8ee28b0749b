"""Command-line entry point.

Exit codes: 0 ok, 1 verification failure, 2 parse or flag error,
3 size overflow, 4 graph not 2-degenerate, 5 segment family not all-crossing.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import io
from .arrangements.segments import exhaustive_grid, find_k_grid, generate_no_grid_family
from .errors import NotAllCrossing, NotTwoDegenerate, ParseError, PreconditionError, ShapeMismatch, SizeOverflow
from .exactgeom import format_rat
from .graphs import (DEFAULT_MULTIPLICITY, generate_lower_bound_graph, heights, random_2degenerate)
from .layout import EdgeColor, construct_drawing, coordinate_bits
from .svg import drawing_to_svg
from .verify import (DEFAULT_EXACT_LIMIT, build_conflict_graph, check_feasible, color_class_is_forest,
                     epsilon_violations, min_plane_decomposition, min_plane_forest_decomposition,
                     monochromatic_crossings, placement_violations, slope_violations)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_OVERFLOW, EXIT_NOT_DEGENERATE, EXIT_NOT_CROSSING = range(6)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _info(args, msg: str) -> None:
    # keep stdout clean when the payload goes there
    stream = sys.stderr if args.out in (None, "-") else sys.stdout
    print(msg, file=stream)


def _exact_limit(args) -> int:
    if getattr(args, "exact_limit", None) is not None:
        return args.exact_limit
    env = os.environ.get("PLANEWEAVE_EXACT_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"PLANEWEAVE_EXACT_LIMIT={env!r} is not an integer") from None
    return DEFAULT_EXACT_LIMIT


def cmd_generate(args) -> int:
    if args.family == "lower-bound":
        g = generate_lower_bound_graph(args.n, args.multiplicity, args.cap)
        sizes = "/".join(str(s) for s in g.layer_sizes())
    else:
        if args.n < 1:
            raise ParseError("--n must be positive")
        g = random_2degenerate(args.n, args.seed)
        sizes = "/".join(str(len(level)) for level in heights(g).levels)
    _write(args.out, io.write_graph(g))
    _info(args, f"vertices {g.n} edges {len(g.edges)} layers {sizes}")
    return EXIT_OK


def cmd_draw(args) -> int:
    g = io.read_graph(_read(args.input))
    trace = [] if args.trace else None
    d = construct_drawing(g, trace)
    _write(args.out, io.write_drawing(d))
    status = EXIT_OK
    if trace is not None:
        lines = []
        for t in trace:
            lines.append(f"level {t.level}")
            if t.slope is not None:
                lines.append(f"m {format_rat(t.slope)}")
                lines.append(f"eps {format_rat(t.epsilon)}")
                ok_m = not slope_violations(t.reflected, t.slope)
                eps_bad = epsilon_violations(t.reflected, t.slope, t.epsilon)
                ok_p = not placement_violations(t.reflected, t.schedule, t.drawing, t.slope, t.epsilon)
                lines.append(f"slope {'PASS' if ok_m else 'FAIL'}")
                for name, witness in eps_bad.items():
                    lines.append(f"eps-{name} {'PASS' if witness is None else 'FAIL ' + str(witness)}")
                lines.append(f"placement {'PASS' if ok_p else 'FAIL'}")
                if not (ok_m and ok_p) or any(w is not None for w in eps_bad.values()):
                    status = EXIT_FAIL
            report = check_feasible(t.drawing, t.graph, t.level)
            lines.extend(report.lines())
            if not report.overall:
                status = EXIT_FAIL
        _info(args, "\n".join(lines))
    return status


def _verify_lines(d, g) -> tuple[list, bool]:
    report = check_feasible(d, g)
    lines = report.lines()
    ok = report.overall
    for c in EdgeColor:
        forest = color_class_is_forest(d, c)
        ok &= forest
        lines.append(f"forest {c.value} {'PASS' if forest else 'FAIL'}")
    return lines, ok


def cmd_verify(args) -> int:
    g = io.read_graph(_read(args.graph))
    d = io.read_drawing(_read(args.drawing))
    try:
        lines, ok = _verify_lines(d, g)
    except ShapeMismatch as exc:
        print(f"shape mismatch: {exc}")
        print("OVERALL FAIL")
        return EXIT_FAIL
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_decompose(args) -> int:
    d = io.read_drawing(_read(args.drawing))
    limit = _exact_limit(args)
    plane = min_plane_decomposition(build_conflict_graph(d.pos, d.color), limit)
    forest = min_plane_forest_decomposition(d, limit)
    print(f"plane {plane.count} {'exact' if plane.exact else 'heuristic'}")
    print(f"forest {forest.count} {'exact' if forest.exact else 'heuristic'}")
    return EXIT_OK


def cmd_gridfind(args) -> int:
    f = io.read_segments(_read(args.segments))
    if args.exhaustive:
        cert, certified = exhaustive_grid(f, args.k), True
    else:
        cert = find_k_grid(f, args.k)
        certified = len(f.red) * len(f.blue) <= 10**4
    if cert is None:
        print("none (exhaustive)" if certified else "none (uncertified)")
        return EXIT_OK
    print("red " + " ".join(map(str, cert.red_idx)))
    print("blue " + " ".join(map(str, cert.blue_idx)))
    print("order-along-red " + " ".join(map(str, cert.cross_order_red)))
    print("order-along-blue " + " ".join(map(str, cert.cross_order_blue)))
    return EXIT_OK


def cmd_nogk(args) -> int:
    f = generate_no_grid_family(args.k)
    _write(args.out, io.write_segments(f))
    _info(args, f"red {len(f.red)} blue {len(f.blue)}")
    return EXIT_OK


def cmd_svg(args) -> int:
    d = io.read_drawing(_read(args.drawing))
    _write(args.out, drawing_to_svg(d, args.scale, args.exact_labels))
    return EXIT_OK


def cmd_report(args) -> int:
    g = io.read_graph(_read(args.graph))
    d = construct_drawing(g)
    hm = heights(g)
    lines, ok = _verify_lines(d, g)
    crossings = monochromatic_crossings(d)
    num, den = coordinate_bits(d)
    limit = _exact_limit(args)
    plane = min_plane_decomposition(build_conflict_graph(d.pos, d.color), limit)
    forest = min_plane_forest_decomposition(d, limit)
    print(f"vertices {g.n}")
    print(f"edges {len(g.edges)}")
    print(f"height {hm.top}")
    print("level sizes " + "/".join(str(len(level)) for level in hm.levels))
    print(f"coordinate bits numerator {num} denominator {den}")
    print(f"monochromatic crossings {len(crossings)}")
    print(f"plane classes {plane.count} ({'exact' if plane.exact else 'heuristic'})")
    print(f"forest classes {forest.count} ({'exact' if forest.exact else 'heuristic'})")
    print("\n".join(lines))
    return EXIT_OK if ok and not crossings else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planeweave", description="Exact 4-coloured drawings of 2-degenerate graphs and grid searches.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("generate", help="write a lower-bound or random graph")
    s.add_argument("--family", choices=("lower-bound", "random"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--multiplicity", type=int, default=DEFAULT_MULTIPLICITY)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cap", type=int, default=10**7, help="maximum vertex count")
    s.add_argument("--out")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("draw", help="construct a feasible drawing")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out")
    s.add_argument("--trace", action="store_true", help="report slope, epsilon and feasibility per level")
    s.set_defaults(func=cmd_draw)

    s = sub.add_parser("verify", help="check a drawing against its graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--drawing", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("decompose", help="fewest plane and plane-forest classes for a fixed drawing")
    s.add_argument("--drawing", required=True)
    s.add_argument("--exact-limit", type=int)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("gridfind", help="find a k-grid in a red/blue segment family")
    s.add_argument("--segments", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--exhaustive", action="store_true", help="search all subsets; also accepts families that are not all-crossing")
    s.set_defaults(func=cmd_gridfind)

    s = sub.add_parser("noGk", help="write 3k+3k segments without a (k+1)-grid")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_nogk)

    s = sub.add_parser("svg", help="render a drawing")
    s.add_argument("--drawing", required=True)
    s.add_argument("--out")
    s.add_argument("--scale", type=float, default=100.0)
    s.add_argument("--exact-labels", action="store_true")
    s.set_defaults(func=cmd_svg)

    s = sub.add_parser("report", help="draw, verify and decompose a graph in one go")
    s.add_argument("--graph", required=True)
    s.add_argument("--exact-limit", type=int)
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except NotTwoDegenerate as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_DEGENERATE
    except NotAllCrossing as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CROSSING


if __name__ == "__main__":
    sys.exit(main())
