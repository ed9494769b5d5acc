"""Exact predicates and crossing counts for straight-line spider drawings.

All arithmetic is done on :class:`fractions.Fraction`; nothing is rounded.
"""

from __future__ import annotations

import enum
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .spider import (
    EdgeRef,
    SpiderError,
    SpiderSpec,
    VertexLabel,
    are_incident,
    label_from_json,
    spider_from_json,
)


class NotGoodDrawing(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        summary = "; ".join(str(v) for v in self.violations[:5])
        more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
        super().__init__(f"drawing is not good: {summary}{more}")


@dataclass(frozen=True, order=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __sub__(self, other: RationalPoint) -> tuple[Fraction, Fraction]:
        return (self.x - other.x, self.y - other.y)


class Orientation(enum.Enum):
    LEFT = 1
    RIGHT = -1
    COLLINEAR = 0


def _cross(p: RationalPoint, q: RationalPoint, r: RationalPoint) -> Fraction:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: RationalPoint, q: RationalPoint, r: RationalPoint) -> Orientation:
    """Which side of the directed line p->q the point r lies on."""
    c = _cross(p, q, r)
    if c > 0:
        return Orientation.LEFT
    if c < 0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def segments_properly_cross(a1, a2, b1, b2) -> bool:
    """True iff the open segments a1a2 and b1b2 meet in a single interior point."""
    o1 = _sign(_cross(a1, a2, b1))
    o2 = _sign(_cross(a1, a2, b2))
    if o1 * o2 != -1:
        return False
    o3 = _sign(_cross(b1, b2, a1))
    o4 = _sign(_cross(b1, b2, a2))
    return o3 * o4 == -1


def _strictly_inside(p: RationalPoint, a: RationalPoint, b: RationalPoint) -> bool:
    # assumes p is collinear with a, b
    if (p.x, p.y) == (a.x, a.y) or (p.x, p.y) == (b.x, b.y):
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def _collinear_overlap(a1, a2, b1, b2) -> bool:
    """True iff the two collinear segments share a sub-segment of positive length."""
    if _cross(a1, a2, b1) != 0 or _cross(a1, a2, b2) != 0:
        return False
    # project onto the dominant axis of a
    if a1.x != a2.x:
        key = lambda p: p.x  # noqa: E731
    else:
        key = lambda p: p.y  # noqa: E731
    lo = max(min(key(a1), key(a2)), min(key(b1), key(b2)))
    hi = min(max(key(a1), key(a2)), max(key(b1), key(b2)))
    return lo < hi


def intersection_point(a1, a2, b1, b2) -> RationalPoint:
    """Intersection of the (non-parallel) lines through a1a2 and b1b2."""
    dx, dy = a2 - a1
    ex, ey = b2 - b1
    denom = dx * ey - dy * ex
    if denom == 0:
        raise ValueError("lines are parallel")
    fx, fy = b1 - a1
    t = (fx * ey - fy * ex) / denom
    return RationalPoint(a1.x + t * dx, a1.y + t * dy)


@dataclass(frozen=True)
class CoordinateDrawing:
    """A straight-line drawing: one exact position per spider vertex."""

    spider: SpiderSpec
    positions: Mapping[VertexLabel, RationalPoint]

    def __post_init__(self):
        given = set(self.positions)
        expected = set(self.spider.vertices)
        if given != expected:
            missing = sorted(expected - given)
            extra = sorted(given - expected)
            raise SpiderError(f"positions must cover every vertex exactly; missing {missing}, unknown {extra}")

    def segment(self, e: EdgeRef) -> tuple[RationalPoint, RationalPoint]:
        return self.positions[e.a], self.positions[e.b]

    def edges_cross(self, e1: EdgeRef, e2: EdgeRef) -> bool:
        if are_incident(e1, e2):
            return False
        return segments_properly_cross(*self.segment(e1), *self.segment(e2))


class ViolationKind(str, enum.Enum):
    DUPLICATE_POSITION = "DuplicatePosition"
    VERTEX_ON_EDGE = "VertexOnEdge"
    COLLINEAR_OVERLAP = "CollinearOverlap"
    THREE_EDGES_CONCURRENT = "ThreeEdgesConcurrent"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    vertices: tuple[VertexLabel, ...] = ()
    edges: tuple[EdgeRef, ...] = ()

    def __str__(self) -> str:
        parts = [str(v) for v in self.vertices] + [str(e) for e in self.edges]
        return f"{self.kind.value}[{', '.join(parts)}]"

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "vertices": [list(v) for v in self.vertices],
            "edges": [[list(e.a), list(e.b)] for e in self.edges],
        }


def validate_good_drawing(d: CoordinateDrawing) -> list[Violation]:
    """Every way ``d`` fails to be a good drawing; an empty list means OK."""
    s, pos = d.spider, d.positions
    out: list[Violation] = []

    by_point = defaultdict(list)
    for v in s.vertices:
        by_point[pos[v]].append(v)
    for vs in by_point.values():
        if len(vs) > 1:
            out.append(Violation(ViolationKind.DUPLICATE_POSITION, vertices=tuple(vs)))

    for v in s.vertices:
        p = pos[v]
        for e in s.edges:
            if v in e:
                continue
            a, b = d.segment(e)
            if _cross(a, b, p) == 0 and _strictly_inside(p, a, b):
                out.append(Violation(ViolationKind.VERTEX_ON_EDGE, vertices=(v,), edges=(e,)))

    crossings = defaultdict(set)
    es = s.edges
    for p in range(len(es)):
        a1, a2 = d.segment(es[p])
        for q in range(p + 1, len(es)):
            b1, b2 = d.segment(es[q])
            if _collinear_overlap(a1, a2, b1, b2):
                out.append(Violation(ViolationKind.COLLINEAR_OVERLAP, edges=(es[p], es[q])))
            elif not are_incident(es[p], es[q]) and segments_properly_cross(a1, a2, b1, b2):
                x = intersection_point(a1, a2, b1, b2)
                crossings[x].update((es[p], es[q]))
    for x, through in crossings.items():
        if len(through) >= 3:
            out.append(
                Violation(ViolationKind.THREE_EDGES_CONCURRENT, edges=tuple(sorted(through, key=s.edge_index.get)))
            )
    return out


def crossing_pairs_geometric(d: CoordinateDrawing) -> list[tuple[EdgeRef, EdgeRef]]:
    return [(e1, e2) for e1, e2 in d.spider.nonincident_pairs if d.edges_cross(e1, e2)]


def count_crossings_geometric(d: CoordinateDrawing, check: bool = True) -> int:
    """Number of non-incident edge pairs whose segments properly cross.

    With ``check=False`` the good-drawing validation is skipped and the raw
    pair count is returned, which is useful for diagnosing bad drawings.
    """
    if check:
        violations = validate_good_drawing(d)
        if violations:
            raise NotGoodDrawing(violations)
    return len(crossing_pairs_geometric(d))


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL.match(text.strip()):
        raise SpiderError(f'coordinates must be "num/den" strings, got {text!r}')
    value = Fraction(text.strip())
    return value


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def drawing_to_json(d: CoordinateDrawing) -> dict:
    return {
        "legs": list(d.spider.legs),
        "positions": [
            {"v": list(v), "x": format_rational(d.positions[v].x), "y": format_rational(d.positions[v].y)}
            for v in d.spider.vertices
        ],
    }


def drawing_from_json(obj: dict) -> CoordinateDrawing:
    s = spider_from_json(obj)
    if s.legs != tuple(obj["legs"]):
        raise SpiderError("drawing files must list legs in non-increasing order")
    entries = obj.get("positions")
    if not isinstance(entries, list):
        raise SpiderError('drawing JSON needs a "positions" array')
    positions = {}
    for entry in entries:
        try:
            v = label_from_json(entry["v"])
            p = RationalPoint(parse_rational(entry["x"]), parse_rational(entry["y"]))
        except (KeyError, TypeError):
            raise SpiderError(f"bad position entry {entry!r}") from None
        if v in positions:
            raise SpiderError(f"vertex {v} positioned twice")
        positions[v] = p
    return CoordinateDrawing(s, positions)
