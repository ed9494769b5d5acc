"""Command line front end: ``spidercross {bounds,draw,count,search,verify,export}``.

Output is JSON on stdout unless ``--format`` asks for text, svg or tikz.
Exit status is 0 on success, 1 when the input fails validation and 2 for
usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .bounds import auxiliary_graph, bounds_report, missed_by_leg_pair
from .convex import (
    CyclicOrder,
    algorithm_order,
    count_crossings_convex,
    missed_pairs,
    order_from_json,
    realize,
)
from .export import export_svg, export_tikz
from .geometry import (
    NotGoodDrawing,
    count_crossings_geometric,
    crossing_pairs_geometric,
    drawing_from_json,
    drawing_to_json,
    validate_good_drawing,
)
from .search import DEFAULT_BUDGET, BudgetExceeded, exhaustive_max, hill_climb, verify_conjecture
from .spider import SpiderError, edge_to_json, make_spider, spider_from_json, thrackle_bound

CONVEX_ONLY_NOTE = (
    "exhaustive maxima range over convex drawings only; equality confirms the conjecture "
    "restricted to convex drawings, a larger value would refute it"
)

RANGE_HELP = """\
legs-range expressions have the form "k=A..B,len=C..D" (single values allowed,
e.g. "k=4,len=2"). Each expands to every non-increasing legs list with a leg
count in A..B and every leg length in C..D. Join several with ";", for
example "k=3,len=2..3;k=4,len=2".
"""

MAX_RANGE_ROWS = 10_000


class UsageError(Exception):
    pass


def parse_legs(text: str):
    try:
        legs = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    try:
        return make_spider(legs)
    except SpiderError as exc:
        raise argparse.ArgumentTypeError(f"{type(exc).__name__}: {exc}") from None


def _parse_span(value: str, name: str) -> range:
    lo, sep, hi = value.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad {name} range {value!r}") from None
    if a > b:
        raise UsageError(f"empty {name} range {value!r}")
    return range(a, b + 1)


def expand_legs_range(expr: str) -> list[list[int]]:
    """Expand a legs-range expression (see RANGE_HELP) into legs lists."""
    out: list[list[int]] = []
    for part in expr.split(";"):
        part = part.strip()
        if not part:
            continue
        fields = {}
        for item in part.split(","):
            key, eq, value = item.strip().partition("=")
            if not eq or key not in ("k", "len") or key in fields:
                raise UsageError(f"bad term {item!r} in legs range {part!r}")
            fields[key] = _parse_span(value, key)
        if set(fields) != {"k", "len"}:
            raise UsageError(f"legs range {part!r} needs both k= and len=")
        for k in fields["k"]:
            if k < 3:
                raise UsageError(f"legs range {part!r} asks for k={k}; spiders need k >= 3")
            if fields["len"][0] < 1:
                raise UsageError(f"legs range {part!r} has non-positive leg lengths")
            for combo in itertools.combinations_with_replacement(reversed(fields["len"]), k):
                out.append(list(combo))
                if len(out) > MAX_RANGE_ROWS:
                    raise UsageError(f"legs range expands to more than {MAX_RANGE_ROWS} spiders")
    if not out:
        raise UsageError(f"legs range {expr!r} is empty")
    return out


def _load_input(args) -> dict:
    if args.legs is not None:
        return {"legs": list(args.legs.legs)}
    if args.infile is None or args.infile == "-":
        text = sys.stdin.read()
    else:
        with open(args.infile) as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpiderError(f"input is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise SpiderError("input JSON must be an object")
    return obj


def _spider(args):
    if args.legs is not None:
        return args.legs
    if args.infile is None:
        raise UsageError("give the spider with --legs or --in FILE")
    return spider_from_json(_load_input(args))


def _drawing_source(args):
    """A CyclicOrder or CoordinateDrawing from the command's input."""
    if args.legs is not None:
        return algorithm_order(args.legs)
    obj = _load_input(args)
    if "order" in obj:
        return order_from_json(obj)
    if "positions" in obj:
        return drawing_from_json(obj)
    return algorithm_order(spider_from_json(obj))


def _text_table(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def _pairs_json(pairs):
    return [[edge_to_json(e1), edge_to_json(e2)] for e1, e2 in pairs]


def cmd_bounds(args) -> str:
    report = bounds_report(_spider(args))
    if args.format == "text":
        rows = [[key, str(value)] for key, value in report.to_json().items()]
        return _text_table(rows)
    return json.dumps(report.to_json()) + "\n"


def cmd_draw(args) -> str:
    s = _spider(args)
    order = algorithm_order(s)
    drawing = realize(order)
    count = count_crossings_convex(order)
    if args.format == "svg":
        return export_svg(drawing, count)
    if args.format == "tikz":
        return export_tikz(drawing, count)
    out = {**order.to_json(), "positions": drawing_to_json(drawing)["positions"], "crossings": count}
    if args.format == "text":
        return f"order: {' '.join(str(v) for v in order.sequence)}\ncrossings: {count}\n"
    return json.dumps(out) + "\n"


def cmd_count(args) -> str:
    src = _drawing_source(args)
    s = src.spider
    violations = []
    if isinstance(src, CyclicOrder):
        count = count_crossings_convex(src)
        missed = missed_pairs(src)
        kind = "order"
    else:
        if args.no_validate:
            violations = validate_good_drawing(src)
            count = count_crossings_geometric(src, check=False)
        else:
            count = count_crossings_geometric(src)
        crossing = set(crossing_pairs_geometric(src))
        missed = [p for p in s.nonincident_pairs if p not in crossing]
        kind = "positions"
    aux = auxiliary_graph(s, src) if s.legs[-1] >= 2 else None
    out = {
        "legs": list(s.legs),
        "source": kind,
        "crossings": count,
        "thrackle": thrackle_bound(s),
        "missed_pairs": _pairs_json(missed),
        "missed_by_leg_pair": [[a, b, c] for (a, b), c in sorted(missed_by_leg_pair(s, src).items())],
        "auxiliary_graph": aux.to_json() if aux else None,
        "violations": [v.to_json() for v in violations],
    }
    if args.format == "text":
        lines = [f"crossings: {count} (thrackle bound {out['thrackle']})"]
        lines += [f"missed: {e1} x {e2}" for e1, e2 in missed]
        if aux:
            lines.append("thrackled leg pairs: " + " ".join(f"{a}{b}" for a, b in sorted(aux.edges)))
        lines += [f"violation: {v}" for v in violations]
        return "\n".join(lines) + "\n"
    return json.dumps(out) + "\n"


def cmd_search(args) -> str:
    s = _spider(args)
    if args.exhaustive:
        result = exhaustive_max(
            s,
            budget=args.budget,
            reflection=not args.no_symmetry,
            equal_legs=args.equal_legs and not args.no_symmetry,
            workers=args.workers,
        )
    else:
        result = hill_climb(s, seed=args.seed, restarts=args.restarts, steps=args.steps)
    if args.format == "text":
        return (
            f"best_count: {result.best_count}\n"
            f"witness: {' '.join(str(v) for v in result.witness.sequence)}\n"
            f"orders_examined: {result.orders_examined}\n"
            f"exhaustive: {result.exhaustive}\n"
            f"matches_conjecture: {result.matches_conjecture}\n"
        )
    return json.dumps(result.to_json()) + "\n"


def cmd_verify(args) -> str:
    legs_lists = []
    for expr in args.ranges:
        legs_lists.extend(expand_legs_range(expr))
    for text in args.extra_legs or ():
        legs_lists.append(list(text.legs))
    spiders = [make_spider(legs) for legs in legs_lists]
    rows = verify_conjecture(
        spiders,
        budget=args.budget,
        reflection=not args.no_symmetry,
        equal_legs=args.equal_legs and not args.no_symmetry,
        workers=args.workers,
    )
    mismatches = [r for r in rows if not r.equal]
    if args.format == "text":
        table = [["legs", "conjectured", "convex max", "status"]]
        for r in rows:
            flag = r.status if r.equal else f"** {r.status.upper()} **"
            table.append([",".join(map(str, r.spider.legs)), str(r.conjectured), str(r.exhaustive_max), flag])
        summary = f"{len(rows) - len(mismatches)}/{len(rows)} rows equal"
        return _text_table(table) + f"{summary}\nnote: {CONVEX_ONLY_NOTE}\n"
    return (
        json.dumps(
            {
                "rows": [r.to_json() for r in rows],
                "all_equal": not mismatches,
                "mismatches": [list(r.spider.legs) for r in mismatches],
                "note": CONVEX_ONLY_NOTE,
            }
        )
        + "\n"
    )


def cmd_export(args) -> str:
    src = _drawing_source(args)
    if isinstance(src, CyclicOrder):
        count = count_crossings_convex(src)
        drawing = realize(src)
    else:
        drawing = src
        count = count_crossings_geometric(src)
    fmt = args.format if args.format in ("svg", "tikz") else "svg"
    return export_svg(drawing, count) if fmt == "svg" else export_tikz(drawing, count)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--legs", type=parse_legs, help="leg lengths, e.g. 4,3,2,2")
    common.add_argument("--in", dest="infile", metavar="FILE", help="JSON input file ('-' for stdin)")
    common.add_argument("--format", choices=["json", "text", "svg", "tikz"], default="json")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    searching = argparse.ArgumentParser(add_help=False)
    searching.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="max orders to enumerate")
    searching.add_argument("--no-symmetry", action="store_true", help="do not quotient by reflection")
    searching.add_argument("--equal-legs", action="store_true", help="also quotient by swapping equal legs")
    searching.add_argument("--workers", type=_positive, default=1)

    parser = argparse.ArgumentParser(prog="spidercross", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="thrackle, lower, upper, exact and conjectured values")
    p.set_defaults(func=cmd_bounds)
    p = sub.add_parser("draw", parents=[common], help="the five-block convex order and its exact realization")
    p.set_defaults(func=cmd_draw)
    p = sub.add_parser("count", parents=[common], help="count crossings of an order or coordinate drawing")
    p.add_argument("--no-validate", action="store_true", help="count even if the drawing is not good")
    p.set_defaults(func=cmd_count)
    p = sub.add_parser("search", parents=[common, searching], help="maximise crossings over convex drawings")
    p.add_argument("--exhaustive", action="store_true", help="enumerate every order instead of hill climbing")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=_positive, default=8)
    p.add_argument("--steps", type=_positive, default=200)
    p.set_defaults(func=cmd_search)
    p = sub.add_parser(
        "verify",
        parents=[common, searching],
        help="conjectured value vs exhaustive convex maximum",
        epilog=RANGE_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("ranges", nargs="*", metavar="RANGE", help='legs-range expression, e.g. "k=3,len=2..3"')
    p.add_argument("--add", dest="extra_legs", type=parse_legs, action="append", help="extra legs list")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("export", parents=[common], help="SVG or TikZ picture of a drawing")
    p.set_defaults(func=cmd_export)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify" and not args.ranges and not args.extra_legs:
        parser.print_usage(sys.stderr)
        print("spidercross verify: error: give at least one RANGE or --add", file=sys.stderr)
        return 2
    try:
        text = args.func(args)
    except UsageError as exc:
        print(f"spidercross {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (SpiderError, NotGoodDrawing, BudgetExceeded, OSError) as exc:
        print(f"spidercross {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
